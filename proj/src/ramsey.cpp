#include <string>
#include <vector>

#include "latcd/enumeration.hpp"

namespace latcd {

  namespace {

    inline constexpr std::size_t kRamseySearchLimit = 7;

  }  // namespace

  bool triangle_free_colouring_exists(std::size_t n) {
    if (n > kRamseySearchLimit) {
      throw Error(ErrorKind::SizeGuard, "colouring search is limited to K_"
                                            + std::to_string(kRamseySearchLimit));
    }
    std::vector<std::vector<std::size_t>> edge(n, std::vector<std::size_t>(n));
    std::size_t                           m = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        edge[i][j] = edge[j][i] = m++;
      }
    }
    std::vector<std::uint64_t> triangles;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          triangles.push_back((1ull << edge[i][j]) | (1ull << edge[i][k])
                              | (1ull << edge[j][k]));
        }
      }
    }
    for (std::uint64_t colour = 0; colour < (1ull << m); ++colour) {
      bool mono = false;
      for (auto t : triangles) {
        auto c = colour & t;
        if (c == 0 || c == t) {
          mono = true;
          break;
        }
      }
      if (!mono) {
        return true;
      }
    }
    return false;
  }

  std::size_t ramsey_r33() {
    std::size_t n = 3;
    while (triangle_free_colouring_exists(n)) {
      ++n;
    }
    return n;
  }

  std::size_t k_of_p(Dyadic const& p) {
    if (p.is_zero() || p > Dyadic::one()) {
      throw Error(ErrorKind::Domain, "p must lie in (0, 1]");
    }
    // p = m / 2^e with m odd, so log2(1/p) = e - log2 m and the floor is
    // e - ceil(log2 m).
    BigInt const& m        = p.mantissa();
    std::size_t   ceil_log = m == 1 ? 0 : boost::multiprecision::msb(m) + 1;
    return static_cast<std::size_t>(p.exp() - ceil_log) + 3;
  }

  std::size_t f_of_p(Dyadic const& p) {
    std::size_t const k = k_of_p(p);
    if (k != 3) {
      throw Error(ErrorKind::Unsupported,
                  "f(p) needs the " + std::to_string(k - 1) + "-colour Ramsey number R("
                      + std::to_string(k) + ", ..., " + std::to_string(k)
                      + "), which is not known (already R(4,4,4) is open)");
    }
    return 2 * k * (ramsey_r33() + 1);
  }

}  // namespace latcd
