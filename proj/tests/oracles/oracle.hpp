// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library except to_lattice().
#ifndef LATCD_TESTS_ORACLE_HPP_
#define LATCD_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "latcd/lattice.hpp"

namespace oracle {

  //! leq[i][j] == (i <= j)
  using Matrix = std::vector<std::vector<bool>>;

  struct Tables {
    std::vector<std::vector<std::size_t>> join, meet;
  };

  //! Least upper and greatest lower bounds by search, or nullopt if some
  //! pair lacks one.
  inline std::optional<Tables> tables(Matrix const& leq) {
    std::size_t const n = leq.size();
    Tables            t{std::vector(n, std::vector<std::size_t>(n)),
             std::vector(n, std::vector<std::size_t>(n))};
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::optional<std::size_t> lub, glb;
        for (std::size_t z = 0; z < n; ++z) {
          if (leq[x][z] && leq[y][z]) {
            bool least = true;
            for (std::size_t w = 0; w < n; ++w) {
              if (leq[x][w] && leq[y][w] && !leq[z][w]) {
                least = false;
              }
            }
            if (least) {
              lub = z;
            }
          }
          if (leq[z][x] && leq[z][y]) {
            bool greatest = true;
            for (std::size_t w = 0; w < n; ++w) {
              if (leq[w][x] && leq[w][y] && !leq[w][z]) {
                greatest = false;
              }
            }
            if (greatest) {
              glb = z;
            }
          }
        }
        if (!lub || !glb) {
          return std::nullopt;
        }
        t.join[x][y] = *lub;
        t.meet[x][y] = *glb;
      }
    }
    return t;
  }

  //! Every lattice order on {0..n-1} with 0 the bottom, n-1 the top and
  //! i < j whenever i is below j. Each isomorphism type appears at least once.
  inline std::vector<Matrix> labelled_lattices(std::size_t n) {
    std::vector<Matrix> out;
    if (n <= 2) {
      Matrix m(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          m[i][j] = true;
        }
      }
      out.push_back(m);
      return out;
    }
    std::size_t const                               inner = n - 2;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 1; i <= inner; ++i) {
      for (std::size_t j = i + 1; j <= inner; ++j) {
        slots.emplace_back(i, j);
      }
    }
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
      Matrix m(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = m[0][i] = m[i][n - 1] = true;
      }
      for (std::size_t b = 0; b < slots.size(); ++b) {
        if (mask >> b & 1u) {
          m[slots[b].first][slots[b].second] = true;
        }
      }
      bool transitive = true;
      for (std::size_t i = 1; i <= inner && transitive; ++i) {
        for (std::size_t j = i + 1; j <= inner && transitive; ++j) {
          for (std::size_t k = j + 1; k <= inner && transitive; ++k) {
            if (m[i][j] && m[j][k] && !m[i][k]) {
              transitive = false;
            }
          }
        }
      }
      if (transitive && tables(m)) {
        out.push_back(std::move(m));
      }
    }
    return out;
  }

  //! Number of set partitions compatible with join and meet.
  inline std::size_t congruence_count(Matrix const& leq) {
    std::size_t const        n = leq.size();
    Tables const             t = *tables(leq);
    std::vector<std::size_t> block(n, 0);
    std::size_t              count = 0;
    auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
      if (i == n) {
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            if (block[x] != block[y]) {
              continue;
            }
            for (std::size_t z = 0; z < n; ++z) {
              if (block[t.join[x][z]] != block[t.join[y][z]]
                  || block[t.meet[x][z]] != block[t.meet[y][z]]) {
                return;
              }
            }
          }
        }
        ++count;
        return;
      }
      for (std::size_t b = 0; b <= used; ++b) {
        block[i] = b;
        self(self, i + 1, std::max(used, b + 1));
      }
    };
    if (n > 0) {
      block[0] = 0;
      rec(rec, 1, 1);
    }
    return count;
  }

  //! Order isomorphism by trying every permutation.
  inline bool isomorphic(Matrix const& a, Matrix const& b) {
    if (a.size() != b.size()) {
      return false;
    }
    std::vector<std::size_t> p(a.size());
    std::iota(p.begin(), p.end(), 0);
    do {
      bool ok = true;
      for (std::size_t i = 0; i < a.size() && ok; ++i) {
        for (std::size_t j = 0; j < a.size() && ok; ++j) {
          ok = a[i][j] == b[p[i]][p[j]];
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  }

  //! Distinct isomorphism types among `all`, by pairwise permutation search.
  inline std::vector<Matrix> iso_types(std::vector<Matrix> const& all) {
    std::vector<Matrix> reps;
    for (auto const& m : all) {
      bool fresh = true;
      for (auto const& r : reps) {
        if (isomorphic(m, r)) {
          fresh = false;
          break;
        }
      }
      if (fresh) {
        reps.push_back(m);
      }
    }
    return reps;
  }

  inline Matrix matrix_of(latcd::Lattice const& L) {
    Matrix m(L.size(), std::vector<bool>(L.size()));
    for (latcd::ElementId x = 0; x < L.size(); ++x) {
      for (latcd::ElementId y = 0; y < L.size(); ++y) {
        m[x][y] = L.leq(x, y);
      }
    }
    return m;
  }

  inline latcd::Lattice to_lattice(Matrix const& leq) {
    std::size_t const          n = leq.size();
    std::vector<latcd::Bitset> up(n, latcd::Bitset(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (leq[x][y]) {
          up[x].set(y);
        }
      }
    }
    return latcd::Lattice::from_order(up);
  }

}  // namespace oracle

#endif  // LATCD_TESTS_ORACLE_HPP_
