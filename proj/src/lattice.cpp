#include "latcd/lattice.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <string>

namespace latcd {

  namespace {
    std::string pair_str(ElementId a, ElementId b) {
      return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
    }
  }  // namespace

  Lattice Lattice::from_covers(std::size_t                   n,
                               std::vector<Edge> const&      covers,
                               std::vector<ElementId> const& labels) {
    if (n == 0) {
      throw Error(ErrorKind::InvalidInput, "a lattice needs at least one element");
    }
    if (!labels.empty() && labels.size() != n) {
      throw Error(ErrorKind::InvalidInput, "label count differs from size");
    }
    auto label = [&labels](std::size_t x) {
      return labels.empty() ? static_cast<ElementId>(x) : labels[x];
    };

    std::set<Edge> unique;
    for (auto const& [lo, hi] : covers) {
      if (lo >= n || hi >= n) {
        throw Error(ErrorKind::InvalidInput,
                    "cover " + pair_str(lo, hi) + " out of range for size "
                        + std::to_string(n));
      }
      if (lo == hi) {
        throw Error(ErrorKind::Cycle,
                    "cover digraph has a loop at " + std::to_string(label(lo)));
      }
      unique.insert({lo, hi});
    }

    std::vector<std::vector<ElementId>> out(n);
    std::vector<std::size_t>            indeg(n, 0);
    for (auto const& [lo, hi] : unique) {
      out[lo].push_back(hi);
      ++indeg[hi];
    }

    // Kahn's algorithm, smallest input id first.
    std::priority_queue<ElementId, std::vector<ElementId>, std::greater<>> ready;
    for (std::size_t x = 0; x < n; ++x) {
      if (indeg[x] == 0) {
        ready.push(static_cast<ElementId>(x));
      }
    }
    std::vector<ElementId> order;
    order.reserve(n);
    while (!ready.empty()) {
      ElementId x = ready.top();
      ready.pop();
      order.push_back(x);
      for (ElementId y : out[x]) {
        if (--indeg[y] == 0) {
          ready.push(y);
        }
      }
    }
    if (order.size() != n) {
      throw Error(ErrorKind::Cycle, "cover digraph is cyclic");
    }

    std::vector<ElementId> pos(n);
    std::vector<ElementId> origin(n);
    for (std::size_t i = 0; i < n; ++i) {
      pos[order[i]] = static_cast<ElementId>(i);
      origin[i]     = label(order[i]);
    }
    std::vector<Edge> internal;
    internal.reserve(unique.size());
    for (auto const& [lo, hi] : unique) {
      internal.emplace_back(pos[lo], pos[hi]);
    }
    return build(n, std::move(internal), std::move(origin));
  }

  Lattice Lattice::from_order(std::vector<Bitset> const&    up,
                              std::vector<ElementId> const& labels) {
    std::size_t const   n = up.size();
    std::vector<Bitset> down(n, Bitset(n));
    for (std::size_t x = 0; x < n; ++x) {
      up[x].for_each([&](std::size_t y) { down[y].set(x); });
    }
    std::vector<Edge> covers;
    for (std::size_t x = 0; x < n; ++x) {
      up[x].for_each([&](std::size_t y) {
        if (y == x) {
          return;
        }
        Bitset between = up[x] & down[y];
        if (between.count() == 2) {
          covers.emplace_back(static_cast<ElementId>(x),
                              static_cast<ElementId>(y));
        }
      });
    }
    return from_covers(n, covers, labels);
  }

  Lattice Lattice::build(std::size_t n, std::vector<Edge> covers,
                         std::vector<ElementId> origin) {
    Lattice L;
    L.n_      = n;
    L.origin_ = std::move(origin);
    std::sort(covers.begin(), covers.end());
    L.covers_ = std::move(covers);
    L.lower_.assign(n, {});
    L.upper_.assign(n, {});
    L.upper_bits_.assign(n, Bitset(n));
    for (auto const& [lo, hi] : L.covers_) {
      L.upper_[lo].push_back(hi);
      L.lower_[hi].push_back(lo);
      L.upper_bits_[lo].set(hi);
    }
    for (auto& v : L.lower_) {
      std::sort(v.begin(), v.end());
    }

    L.up_.assign(n, Bitset(n));
    for (std::size_t x = n; x-- > 0;) {
      L.up_[x].set(x);
      for (ElementId c : L.upper_[x]) {
        L.up_[x] |= L.up_[c];
      }
    }
    L.down_.assign(n, Bitset(n));
    for (std::size_t x = 0; x < n; ++x) {
      L.up_[x].for_each([&](std::size_t y) { L.down_[y].set(x); });
    }

    for (std::size_t x = 0; x < n; ++x) {
      auto const& ups = L.upper_[x];
      for (ElementId c : ups) {
        for (ElementId d : ups) {
          if (c != d && L.up_[d].test(c)) {
            throw Error(ErrorKind::NotReduced,
                        "cover " + pair_str(L.origin_[x], L.origin_[c])
                            + " is implied by " + pair_str(L.origin_[x], L.origin_[d])
                            + " and " + pair_str(L.origin_[d], L.origin_[c]));
          }
        }
      }
    }

    std::size_t minimal = 0;
    std::size_t maximal = 0;
    for (std::size_t x = 0; x < n; ++x) {
      minimal += L.lower_[x].empty() ? 1 : 0;
      maximal += L.upper_[x].empty() ? 1 : 0;
    }
    if (minimal != 1 || maximal != 1) {
      throw Error(ErrorKind::NotBounded,
                  std::to_string(minimal) + " minimal and "
                      + std::to_string(maximal) + " maximal elements");
    }

    // Pairs are visited in label order so that the reported witness does not
    // depend on the internal numbering.
    std::vector<ElementId> by_label(n);
    for (std::size_t i = 0; i < n; ++i) {
      by_label[i] = static_cast<ElementId>(i);
    }
    std::sort(by_label.begin(), by_label.end(), [&L](ElementId a, ElementId b) {
      return L.origin_[a] < L.origin_[b];
    });

    L.join_.assign(n * n, 0);
    L.meet_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      ElementId const x = by_label[i];
      L.join_[x * n + x] = x;
      L.meet_[x * n + x] = x;
      for (std::size_t j = i + 1; j < n; ++j) {
        ElementId const y  = by_label[j];
        Bitset          ub = L.up_[x] & L.up_[y];
        auto const      jn = static_cast<ElementId>(ub.first());
        Bitset          lb = L.down_[x] & L.down_[y];
        auto const      mt = static_cast<ElementId>(lb.last());
        if (!ub.is_subset_of(L.up_[jn]) || !lb.is_subset_of(L.down_[mt])) {
          auto a = L.origin_[x];
          auto b = L.origin_[y];
          throw Error(ErrorKind::NotALattice,
                      "elements " + std::to_string(a) + " and "
                          + std::to_string(b)
                          + " have no unique join or meet",
                      Error::Witness{a, b});
        }
        L.join_[x * n + y] = L.join_[y * n + x] = jn;
        L.meet_[x * n + y] = L.meet_[y * n + x] = mt;
      }
    }
    return L;
  }

  ElementId Lattice::find_origin(ElementId label) const noexcept {
    auto it = std::find(origin_.begin(), origin_.end(), label);
    return static_cast<ElementId>(it - origin_.begin());
  }

  ////////////////////////////////////////////////////////////////////////
  // Element classes and predicates
  ////////////////////////////////////////////////////////////////////////

  Bitset narrows(Lattice const& L) {
    std::size_t const n = L.size();
    Bitset            nar(n);
    for (std::size_t x = 0; x < n; ++x) {
      auto x_ = static_cast<ElementId>(x);
      if ((L.up_set(x_) | L.down_set(x_)).count() == n) {
        nar.set(x);
      }
    }
    return nar;
  }

  ElementProfile profile(Lattice const& L) {
    ElementProfile p;
    std::size_t    n = L.size();
    p.nlc.resize(n);
    p.nuc.resize(n);
    for (ElementId x = 0; x < n; ++x) {
      p.nlc[x] = L.lower_covers(x).size();
      p.nuc[x] = L.upper_covers(x).size();
      if (p.nlc[x] == 1) {
        p.jir.push_back(x);
      } else if (p.nlc[x] > 1) {
        p.jr.push_back(x);
      }
      if (p.nuc[x] == 1) {
        p.mir.push_back(x);
      } else if (p.nuc[x] > 1) {
        p.mr.push_back(x);
      }
    }
    for (auto x : narrows(L).to_vector()) {
      p.nar.push_back(static_cast<ElementId>(x));
    }
    return p;
  }

  bool is_chain(Lattice const& L) {
    return L.covers().size() + 1 == L.size()
           && narrows(L).count() == L.size();
  }

  bool is_semimodular(Lattice const& L) {
    auto const n = static_cast<ElementId>(L.size());
    for (auto const& [x, y] : L.covers()) {
      for (ElementId z = 0; z < n; ++z) {
        ElementId a = L.join(x, z);
        ElementId b = L.join(y, z);
        if (a != b && !L.is_edge(a, b)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_modular(Lattice const& L) {
    auto const n = static_cast<ElementId>(L.size());
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId z = 0; z < n; ++z) {
        if (!L.leq(x, z)) {
          continue;
        }
        for (ElementId y = 0; y < n; ++y) {
          if (L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), z)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_distributive(Lattice const& L) {
    auto const n = static_cast<ElementId>(L.size());
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = 0; y < n; ++y) {
        for (ElementId z = 0; z < n; ++z) {
          if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Derived lattices
  ////////////////////////////////////////////////////////////////////////

  Lattice dual(Lattice const& L) {
    auto const        n = static_cast<ElementId>(L.size());
    std::vector<Edge> covers;
    covers.reserve(L.covers().size());
    for (auto const& [lo, hi] : L.covers()) {
      covers.emplace_back(n - 1 - hi, n - 1 - lo);
    }
    std::vector<ElementId> labels(n);
    for (ElementId x = 0; x < n; ++x) {
      labels[x] = n - 1 - x;
    }
    return Lattice::from_covers(n, covers, labels);
  }

  bool is_sublattice(Lattice const& L, Bitset const& subset) {
    if (subset.none()) {
      return false;
    }
    auto ids = subset.to_vector();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        auto x = static_cast<ElementId>(ids[i]);
        auto y = static_cast<ElementId>(ids[j]);
        if (!subset.test(L.join(x, y)) || !subset.test(L.meet(x, y))) {
          return false;
        }
      }
    }
    return true;
  }

  Lattice sublattice(Lattice const& L, Bitset const& subset) {
    if (!is_sublattice(L, subset)) {
      throw Error(ErrorKind::NotASublattice,
                  "subset is empty or not closed under join and meet");
    }
    auto const             ids = subset.to_vector();
    std::vector<ElementId> local(L.size(), 0);
    std::vector<ElementId> labels;
    labels.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      local[ids[i]] = static_cast<ElementId>(i);
      labels.push_back(static_cast<ElementId>(ids[i]));
    }
    std::vector<Edge> covers;
    for (auto x : ids) {
      Bitset above = L.up_set(static_cast<ElementId>(x)) & subset;
      above.reset(x);
      above.for_each([&](std::size_t y) {
        Bitset between = L.down_set(static_cast<ElementId>(y)) & above;
        if (between.count() == 1) {
          covers.emplace_back(local[x], local[y]);
        }
      });
    }
    return Lattice::from_covers(ids.size(), covers, labels);
  }

  Lattice interval(Lattice const& L, ElementId u, ElementId v) {
    if (!L.leq(u, v)) {
      throw Error(ErrorKind::NotComparable,
                  std::to_string(u) + " is not below " + std::to_string(v));
    }
    return sublattice(L, L.up_set(u) & L.down_set(v));
  }

  bool transposed(Lattice const& L, Edge e0, Edge e1) {
    auto [a, b] = e0;
    auto [c, d] = e1;
    if (!L.leq(a, b) || !L.leq(c, d)) {
      throw Error(ErrorKind::NotComparable, "interval endpoints are not ordered");
    }
    bool const up   = L.meet(b, c) == a && L.join(b, c) == d;
    bool const down = L.meet(d, a) == c && L.join(d, a) == b;
    return up || down;
  }

  Lattice relabel(Lattice const& L, std::vector<ElementId> const& perm) {
    std::size_t const n = L.size();
    if (perm.size() != n) {
      throw Error(ErrorKind::InvalidInput, "permutation has the wrong length");
    }
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
      if (p >= n || seen[p]) {
        throw Error(ErrorKind::InvalidInput, "not a permutation");
      }
      seen[p] = true;
    }
    std::vector<Edge> covers;
    covers.reserve(L.covers().size());
    for (auto const& [lo, hi] : L.covers()) {
      covers.emplace_back(perm[lo], perm[hi]);
    }
    return Lattice::from_covers(n, covers);
  }

  std::vector<std::size_t> depths(Lattice const& L) {
    std::vector<std::size_t> d(L.size(), 0);
    for (ElementId x = 0; x < L.size(); ++x) {
      for (ElementId lo : L.lower_covers(x)) {
        d[x] = std::max(d[x], d[lo] + 1);
      }
    }
    return d;
  }

}  // namespace latcd
