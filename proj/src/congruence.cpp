#include "latcd/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

namespace latcd {

  namespace {

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
      }

      std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
          parent_[x] = parent_[parent_[x]];
          x          = parent_[x];
        }
        return x;
      }

      // true if two classes were merged
      bool unite(std::uint32_t x, std::uint32_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        if (size_[x] < size_[y]) {
          std::swap(x, y);
        }
        parent_[y] = x;
        size_[x] += size_[y];
        return true;
      }

     private:
      std::vector<std::uint32_t> parent_;
      std::vector<std::uint32_t> size_;
    };

    // Quotient of a quasiorder by ⪯-equivalence: a poset on classes listed in
    // a linear extension, as up-set rows.
    std::vector<Bitset> class_poset(QuasiOrder const& q) {
      std::size_t const          m = q.size();
      std::vector<std::uint32_t> cls(m, UINT32_MAX);
      std::vector<std::size_t>   rep;
      for (std::size_t i = 0; i < m; ++i) {
        if (cls[i] != UINT32_MAX) {
          continue;
        }
        cls[i] = static_cast<std::uint32_t>(rep.size());
        for (std::size_t j = i + 1; j < m; ++j) {
          if (cls[j] == UINT32_MAX && q.leq(i, j) && q.leq(j, i)) {
            cls[j] = cls[i];
          }
        }
        rep.push_back(i);
      }
      std::size_t const k = rep.size();
      // Strictly smaller classes have strictly fewer predecessors.
      std::vector<std::size_t> below_count(k, 0);
      for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t d = 0; d < k; ++d) {
          below_count[c] += q.leq(rep[d], rep[c]) ? 1 : 0;
        }
      }
      std::vector<std::size_t> order(k);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
        return below_count[a] < below_count[b];
      });
      std::vector<Bitset> up(k, Bitset(k));
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          if (q.leq(rep[order[a]], rep[order[b]])) {
            up[a].set(b);
          }
        }
      }
      return up;
    }

    class IdealCounter {
     public:
      explicit IdealCounter(std::vector<Bitset> up) : up_(std::move(up)) {}

      BigInt count() {
        Bitset all(up_.size());
        all.set_all();
        return count(all);
      }

     private:
      // Splits on the least remaining element x (minimal in `rest`): ideals
      // avoiding x live in rest \ ↑x, ideals containing x in rest \ {x}.
      BigInt count(Bitset const& rest) {
        std::size_t x = rest.first();
        if (x == Bitset::npos) {
          return 1;
        }
        if (auto it = memo_.find(rest); it != memo_.end()) {
          return it->second;
        }
        Bitset without_up = rest - up_[x];
        Bitset without_x  = rest;
        without_x.reset(x);
        BigInt total = count(without_up) + count(without_x);
        memo_.emplace(rest, total);
        return total;
      }

      std::vector<Bitset>                            up_;
      std::unordered_map<Bitset, BigInt, BitsetHash> memo_;
    };

    void ideals_of(std::vector<Bitset> const& up, Bitset const& rest,
                   Bitset& chosen, std::vector<Bitset>& out) {
      std::size_t x = rest.first();
      if (x == Bitset::npos) {
        out.push_back(chosen);
        return;
      }
      ideals_of(up, rest - up[x], chosen, out);
      Bitset without_x = rest;
      without_x.reset(x);
      chosen.set(x);
      ideals_of(up, without_x, chosen, out);
      chosen.reset(x);
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Congruence
  ////////////////////////////////////////////////////////////////////////

  Congruence Congruence::from_labels(std::span<std::uint32_t const> labels) {
    Congruence                                       c;
    std::unordered_map<std::uint32_t, std::uint32_t> renumber;
    c.block_of.reserve(labels.size());
    for (auto l : labels) {
      auto [it, fresh] = renumber.emplace(l, c.block_count);
      if (fresh) {
        ++c.block_count;
      }
      c.block_of.push_back(it->second);
    }
    return c;
  }

  Congruence Congruence::identity(std::size_t n) {
    Congruence c;
    c.block_of.resize(n);
    std::iota(c.block_of.begin(), c.block_of.end(), 0);
    c.block_count = static_cast<std::uint32_t>(n);
    return c;
  }

  Congruence Congruence::total(std::size_t n) {
    Congruence c;
    c.block_of.assign(n, 0);
    c.block_count = n == 0 ? 0 : 1;
    return c;
  }

  std::vector<std::vector<ElementId>> Congruence::blocks() const {
    std::vector<std::vector<ElementId>> out(block_count);
    for (std::size_t x = 0; x < block_of.size(); ++x) {
      out[block_of[x]].push_back(static_cast<ElementId>(x));
    }
    return out;
  }

  bool Congruence::refines(Congruence const& other) const {
    std::vector<std::uint32_t> target(block_count, UINT32_MAX);
    for (std::size_t x = 0; x < block_of.size(); ++x) {
      auto& t = target[block_of[x]];
      if (t == UINT32_MAX) {
        t = other.block_of[x];
      } else if (t != other.block_of[x]) {
        return false;
      }
    }
    return true;
  }

  Congruence intersect(Congruence const& a, Congruence const& b) {
    std::vector<std::uint32_t> labels(a.block_of.size());
    for (std::size_t x = 0; x < labels.size(); ++x) {
      labels[x] = a.block_of[x] * b.block_count + b.block_of[x];
    }
    return Congruence::from_labels(labels);
  }

  Congruence principal_congruence(Lattice const& L, ElementId a, ElementId b) {
    std::size_t const n = L.size();
    UnionFind         uf(n);
    std::deque<Edge>  work;
    if (uf.unite(a, b)) {
      work.emplace_back(a, b);
    }
    while (!work.empty()) {
      auto [x, y] = work.front();
      work.pop_front();
      for (ElementId z = 0; z < n; ++z) {
        ElementId p = L.join(x, z);
        ElementId q = L.join(y, z);
        if (uf.unite(p, q)) {
          work.emplace_back(p, q);
        }
        p = L.meet(x, z);
        q = L.meet(y, z);
        if (uf.unite(p, q)) {
          work.emplace_back(p, q);
        }
      }
    }
    std::vector<std::uint32_t> labels(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      labels[x] = uf.find(x);
    }
    return Congruence::from_labels(labels);
  }

  bool is_congruence(Lattice const& L, std::span<std::uint32_t const> partition) {
    std::size_t const n = L.size();
    if (partition.size() != n) {
      throw Error(ErrorKind::InvalidInput,
                  "partition has " + std::to_string(partition.size())
                      + " entries for a lattice of size " + std::to_string(n));
    }
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = x + 1; y < n; ++y) {
        if (partition[x] != partition[y]) {
          continue;
        }
        for (ElementId z = 0; z < n; ++z) {
          if (partition[L.join(x, z)] != partition[L.join(y, z)]
              || partition[L.meet(x, z)] != partition[L.meet(y, z)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::vector<Congruence> all_congruences_bruteforce(Lattice const& L) {
    std::size_t const n = L.size();
    if (n > kBruteforceMaxSize) {
      throw Error(ErrorKind::SizeGuard,
                  "brute-force congruence search is limited to "
                      + std::to_string(kBruteforceMaxSize) + " elements");
    }
    std::vector<Congruence>    out;
    std::vector<std::uint32_t> rgs(n, 0);
    // Restricted growth strings: rgs[i] <= 1 + max(rgs[0..i)).
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t max_block) -> void {
      if (i == n) {
        if (is_congruence(L, rgs)) {
          out.push_back(Congruence::from_labels(rgs));
        }
        return;
      }
      for (std::uint32_t b = 0; b <= max_block + 1; ++b) {
        rgs[i] = b;
        self(self, i + 1, std::max(max_block, b));
      }
    };
    rec(rec, 1, 0);
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Join-irreducible quasiorder and counting
  ////////////////////////////////////////////////////////////////////////

  QuasiOrder jir_quasiorder(Lattice const& L) {
    QuasiOrder              q;
    std::vector<ElementId>  lower;
    std::vector<Congruence> cons;
    for (ElementId x = 0; x < L.size(); ++x) {
      if (L.lower_covers(x).size() == 1) {
        q.ground.push_back(x);
        lower.push_back(L.lower_covers(x).front());
        cons.push_back(principal_congruence(L, lower.back(), x));
      }
    }
    std::size_t const m = q.ground.size();
    q.below.assign(m, Bitset(m));
    // con(ȧ, a) ⊆ con(ḃ, b) iff con(ḃ, b) collapses ȧ and a.
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (cons[j].same(lower[i], q.ground[i])) {
          q.below[i].set(j);
        }
      }
    }
    return q;
  }

  BigInt count_ideals(QuasiOrder const& q) {
    return IdealCounter(class_poset(q)).count();
  }

  BigInt con_count(Lattice const& L) {
    return count_ideals(jir_quasiorder(L));
  }

  Dyadic congruence_density(Lattice const& L) {
    return Dyadic(con_count(L), L.size() - 1);
  }

  Lattice quotient(Lattice const& L, Congruence const& theta) {
    if (theta.block_of.size() != L.size() || !is_congruence(L, theta.block_of)) {
      throw Error(ErrorKind::NotACongruence,
                  "partition is not compatible with join and meet");
    }
    std::size_t const      k = theta.block_count;
    std::vector<ElementId> rep(k, 0);
    for (auto const& block : theta.blocks()) {
      rep[theta.block_of[block.front()]] = block.front();
    }
    std::vector<Bitset> up(k, Bitset(k));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (theta.block_of[L.join(rep[a], rep[b])] == b) {
          up[a].set(b);
        }
      }
    }
    return Lattice::from_order(up);
  }

  Lattice congruence_lattice(Lattice const& L, std::size_t bound) {
    BigInt const total = con_count(L);
    if (total > bound) {
      throw Error(ErrorKind::SizeGuard,
                  "|Con L| = " + total.str() + " exceeds the bound "
                      + std::to_string(bound));
    }
    auto const          up = class_poset(jir_quasiorder(L));
    std::vector<Bitset> ideals;
    Bitset              rest(up.size());
    rest.set_all();
    Bitset chosen(up.size());
    ideals_of(up, rest, chosen, ideals);

    std::size_t const   n = ideals.size();
    std::vector<Bitset> order(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (ideals[i].is_subset_of(ideals[j])) {
          order[i].set(j);
        }
      }
    }
    return Lattice::from_order(order);
  }

}  // namespace latcd
