#include "latcd/structure.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace latcd {

  namespace {

    std::string edge_str(Edge e) {
      return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
    }

    void require_reducible_bounds(Lattice const& L) {
      if (!has_reducible_bounds(L)) {
        throw Error(ErrorKind::Precondition,
                    "needs 0 meet-reducible and 1 join-reducible");
      }
    }

    // Removing x from a sublattice T keeps it a sublattice iff no two
    // remaining elements join or meet to x.
    bool removable(Lattice const& L, Bitset const& T, ElementId x) {
      std::vector<ElementId> rest;
      T.for_each([&](std::size_t y) {
        if (y != x) {
          rest.push_back(static_cast<ElementId>(y));
        }
      });
      if (rest.empty()) {
        return false;
      }
      for (std::size_t i = 0; i < rest.size(); ++i) {
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
          if (L.join(rest[i], rest[j]) == x || L.meet(rest[i], rest[j]) == x) {
            return false;
          }
        }
      }
      return true;
    }

    class Dismantler {
     public:
      Dismantler(Lattice const& L, Bitset const& sub) : L_(L), sub_(sub) {}

      bool run(Bitset const& T) {
        if (T == sub_) {
          return true;
        }
        if (failed_.contains(T)) {
          return false;
        }
        Bitset candidates = T - sub_;
        for (std::size_t x = candidates.first(); x != Bitset::npos;
             x             = candidates.next(x + 1)) {
          if (removable(L_, T, static_cast<ElementId>(x))) {
            Bitset smaller = T;
            smaller.reset(x);
            if (run(smaller)) {
              return true;
            }
          }
        }
        failed_.insert(T);
        return false;
      }

     private:
      Lattice const&                         L_;
      Bitset const&                          sub_;
      std::unordered_set<Bitset, BitsetHash> failed_;
    };

    bool mk_at(Lattice const& L, std::size_t k) {
      for (ElementId u = 0; u < L.size(); ++u) {
        auto const& up = L.upper_covers(u);
        if (up.size() < k) {
          continue;
        }
        // Distinct covers of u already meet in u; only the joins matter.
        std::vector<ElementId> chosen;
        auto rec = [&](auto&& self, std::size_t from) -> bool {
          if (chosen.size() == k) {
            return true;
          }
          for (std::size_t i = from; i < up.size(); ++i) {
            ElementId a  = up[i];
            bool      ok = true;
            if (chosen.size() >= 2) {
              ElementId v = L.join(chosen[0], chosen[1]);
              for (ElementId c : chosen) {
                ok = ok && L.join(c, a) == v;
              }
            }
            if (ok) {
              chosen.push_back(a);
              if (self(self, i + 1)) {
                return true;
              }
              chosen.pop_back();
            }
          }
          return false;
        };
        if (rec(rec, 0)) {
          return true;
        }
      }
      return false;
    }

  }  // namespace

  Skeleton skeleton(Lattice const& L) {
    std::size_t const n = L.size();
    Bitset            set(n);
    for (ElementId x = 0; x < n; ++x) {
      if (L.lower_covers(x).size() > 1) {
        set.set(x);
        for (ElementId y : L.lower_covers(x)) {
          set.set(y);
        }
      }
      if (L.upper_covers(x).size() > 1) {
        set.set(x);
        for (ElementId y : L.upper_covers(x)) {
          set.set(y);
        }
      }
    }
    Skeleton out{set, std::nullopt};
    if (set.any()) {
      out.lattice = sublattice(L, set);
    }
    return out;
  }

  std::size_t reducibility_number(Lattice const& L) {
    std::size_t total = 0;
    for (ElementId x = 0; x < L.size(); ++x) {
      if (auto c = L.lower_covers(x).size(); c > 1) {
        total += c + 1;
      }
      if (auto c = L.upper_covers(x).size(); c > 1) {
        total += c + 1;
      }
    }
    return total;
  }

  std::vector<Edge> gluing_edges(Lattice const& L) {
    Bitset const      nar = narrows(L);
    std::vector<Edge> out;
    for (auto const& e : L.covers()) {
      if (nar.test(e.first) && nar.test(e.second)) {
        out.push_back(e);
      }
    }
    return out;
  }

  Lattice collapse_gluing_edge(Lattice const& L, Edge edge) {
    auto [a, b] = edge;
    if (a >= L.size() || b >= L.size() || !L.is_edge(a, b)) {
      throw Error(ErrorKind::NotAGluingEdge, edge_str(edge) + " is not an edge");
    }
    Bitset const nar = narrows(L);
    if (!nar.test(a) || !nar.test(b)) {
      throw Error(ErrorKind::NotAGluingEdge,
                  edge_str(edge) + " has an endpoint that is not a narrow");
    }
    return glued_sum(interval(L, L.bottom(), a), interval(L, b, L.top()));
  }

  Lattice core(Lattice const& L, CollapseOrder order) {
    Lattice cur = L;
    for (;;) {
      auto edges = gluing_edges(cur);
      if (edges.empty()) {
        return cur;
      }
      Edge e = order == CollapseOrder::Smallest ? edges.front() : edges.back();
      cur    = collapse_gluing_edge(cur, e);
    }
  }

  bool has_reducible_bounds(Lattice const& L) {
    return L.upper_covers(L.bottom()).size() > 1
           && L.lower_covers(L.top()).size() > 1;
  }

  std::pair<ElementId, ElementId> projections(Lattice const& L, ElementId x) {
    require_reducible_bounds(L);
    if (x >= L.size()) {
      throw Error(ErrorKind::InvalidInput,
                  "element " + std::to_string(x) + " out of range");
    }
    Bitset const skel = skeleton(L).elements;
    ElementId    dne  = L.bottom();
    ElementId    upe  = L.top();
    (skel & L.down_set(x)).for_each([&](std::size_t y) {
      dne = L.join(dne, static_cast<ElementId>(y));
    });
    (skel & L.up_set(x)).for_each([&](std::size_t y) {
      upe = L.meet(upe, static_cast<ElementId>(y));
    });
    return {dne, upe};
  }

  Lattice truncate_to_skeleton_span(Lattice const& L) {
    Bitset const skel = skeleton(L).elements;
    if (skel.none()) {
      throw Error(ErrorKind::EmptySkeleton, "the skeleton is empty");
    }
    ElementId lo = static_cast<ElementId>(skel.first());
    ElementId hi = lo;
    skel.for_each([&](std::size_t y) {
      lo = L.meet(lo, static_cast<ElementId>(y));
      hi = L.join(hi, static_cast<ElementId>(y));
    });
    return interval(L, lo, hi);
  }

  SkeletonDecomposition skeleton_coordinates(Lattice const& L) {
    require_reducible_bounds(L);
    Skeleton sk = skeleton(L);
    Lattice  S  = std::move(*sk.lattice);

    std::vector<ElementId> embedding(S.origin().begin(), S.origin().end());
    EdgeEnumeration        pi = S.covers();
    std::sort(pi.begin(), pi.end(), [&](Edge const& p, Edge const& q) {
      return std::pair(embedding[p.first], embedding[p.second])
             < std::pair(embedding[q.first], embedding[q.second]);
    });
    ExtensionVector s;
    s.reserve(pi.size());
    for (auto const& [lo, hi] : pi) {
      ElementId u     = embedding[lo];
      ElementId v     = embedding[hi];
      Bitset    span  = L.up_set(u) & L.down_set(v);
      std::size_t cnt = span.count();
      bool      chain = true;
      span.for_each([&](std::size_t y) {
        if (!chain) {
          return;
        }
        span.for_each([&](std::size_t z) {
          if (!L.comparable(static_cast<ElementId>(y), static_cast<ElementId>(z))) {
            chain = false;
          }
        });
      });
      if (!chain) {
        throw Error(ErrorKind::Internal, "interval [" + std::to_string(u) + ", "
                                             + std::to_string(v)
                                             + "] under a skeleton edge is not a chain");
      }
      s.push_back(cnt - 2);
    }
    return {std::move(S), std::move(embedding), std::move(pi), std::move(s)};
  }

  bool is_dismantlable_extension(Lattice const& L, Bitset const& sub) {
    if (sub.size() != L.size() || sub.none() || !is_sublattice(L, sub)) {
      throw Error(ErrorKind::NotASublattice,
                  "the subset is not closed under join and meet");
    }
    Bitset all(L.size());
    all.set_all();
    return Dismantler(L, sub).run(all);
  }

  std::optional<std::pair<std::size_t, std::size_t>>
  find_dominating_pair(std::vector<std::vector<std::size_t>> const& tuples) {
    for (auto const& t : tuples) {
      if (t.size() != tuples.front().size()) {
        throw Error(ErrorKind::ArityMismatch, "tuples of different arity");
      }
    }
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      for (std::size_t j = i + 1; j < tuples.size(); ++j) {
        if (componentwise_leq(tuples[i], tuples[j])) {
          return std::pair(i, j);
        }
      }
    }
    return std::nullopt;
  }

  bool has_mk_configuration(Lattice const& L, std::size_t k) {
    if (k < 3) {
      throw Error(ErrorKind::Domain, "M_k needs k >= 3");
    }
    return mk_at(L, k);
  }

  bool has_dual_mk_configuration(Lattice const& L, std::size_t k) {
    return has_mk_configuration(dual(L), k);
  }

  std::size_t max_cover_count(Lattice const& L) {
    std::size_t best = 0;
    for (ElementId x = 0; x < L.size(); ++x) {
      best = std::max({best, L.lower_covers(x).size(), L.upper_covers(x).size()});
    }
    return best;
  }

}  // namespace latcd
