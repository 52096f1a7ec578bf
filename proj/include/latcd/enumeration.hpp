#ifndef LATCD_ENUMERATION_HPP_
#define LATCD_ENUMERATION_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "latcd/canonical.hpp"
#include "latcd/dyadic.hpp"
#include "latcd/lattice.hpp"

namespace latcd {

  enum class LatticeClass { All, Modular, Semimodular, Distributive };

  [[nodiscard]] std::string_view to_string(LatticeClass cls) noexcept;
  //! "all", "modular", "semimodular" or "distributive"; throws InvalidInput.
  [[nodiscard]] LatticeClass parse_lattice_class(std::string_view name);
  //! Semimodular lattices are not closed under sublattices and quotients.
  [[nodiscard]] bool is_variety(LatticeClass cls) noexcept;
  [[nodiscard]] bool belongs(Lattice const& L, LatticeClass cls);

  inline constexpr std::size_t kDefaultBudget = 10;

  struct Enumerated {
    Lattice       lattice;
    CanonicalCode code;
  };

  //! One lattice per isomorphism class of n-element lattices in `cls`, sorted
  //! by canonical code. Size n is grown from size n - 1 by inserting a new
  //! coatom; results are cached per size for the life of the process.
  //! Throws BudgetExceeded if n > budget, InvalidInput if n == 0.
  [[nodiscard]] std::vector<Enumerated> const&
  enumerate_all(std::size_t n, std::size_t budget = kDefaultBudget);
  [[nodiscard]] std::vector<Enumerated>
  enumerate_lattices(std::size_t n, LatticeClass cls = LatticeClass::All,
                     std::size_t budget = kDefaultBudget);

  //! Calls f(lattice, code) for every lattice of size 1..max_size in `cls`,
  //! size-major, canonical-code order within a size.
  template <typename F>
  void for_each_lattice(std::size_t max_size, LatticeClass cls, F&& f,
                        std::size_t budget = kDefaultBudget) {
    for (std::size_t n = 1; n <= max_size; ++n) {
      for (auto const& e : enumerate_all(n, budget)) {
        if (belongs(e.lattice, cls)) {
          f(e.lattice, e.code);
        }
      }
    }
  }

  struct DensityRecord {
    CanonicalCode code;
    std::size_t   size = 0;
    BigInt        con_count;
    Dyadic        density;
    bool          modular      = false;
    bool          semimodular  = false;
    bool          distributive = false;
  };

  [[nodiscard]] DensityRecord density_record(Lattice const&       L,
                                             CanonicalCode const& code);
  [[nodiscard]] DensityRecord density_record(Lattice const& L);
  [[nodiscard]] std::vector<DensityRecord>
  density_records(std::size_t n, LatticeClass cls,
                  std::size_t budget = kDefaultBudget);

  //! k-th largest distinct |Con L| over n-element members of `cls`.
  //! Throws Undefined if there are fewer than k distinct values.
  [[nodiscard]] BigInt lnc(LatticeClass cls, std::size_t n, std::size_t k,
                           std::size_t budget = kDefaultBudget);

  struct ScdEntry {
    Dyadic        density;
    CanonicalCode witness;  // smallest size, then smallest code
    std::size_t   witness_size = 0;
  };

  //! Distinct densities of members of `cls` with at most max_size elements,
  //! descending.
  [[nodiscard]] std::vector<ScdEntry> scd(LatticeClass cls, std::size_t max_size,
                                          std::size_t budget = kDefaultBudget);
  //! scd restricted to densities >= p. Throws Domain unless 0 < p <= 1.
  [[nodiscard]] std::vector<ScdEntry>
  scd_slice(LatticeClass cls, std::size_t max_size, Dyadic const& p,
            std::size_t budget = kDefaultBudget);

  //! 2^-(n+3) + 3 * 2^-(n+k-1).
  [[nodiscard]] Dyadic l_k_n_density_formula(std::size_t k, std::size_t n);

  struct ConvergenceRow {
    std::size_t k = 0;
    Dyadic      engine;
    Dyadic      formula;
    Dyadic      limit;
  };

  inline constexpr std::size_t kConvergenceMaxK = 24;

  //! Rows k = 8..k_max for l_k_n(k, n), densities from the congruence engine.
  //! Throws Domain if n == 0 or k_max < 8, BudgetExceeded if k_max > 24.
  [[nodiscard]] std::vector<ConvergenceRow> convergence_table(std::size_t n,
                                                              std::size_t k_max);

  //! Whether some 2-colouring of the edges of K_n has no monochromatic
  //! triangle.
  [[nodiscard]] bool triangle_free_colouring_exists(std::size_t n);
  //! R(3,3), by exhaustive search over colourings of K_n for growing n.
  [[nodiscard]] std::size_t ramsey_r33();
  //! floor(log2(1/p)) + 3. Throws Domain unless 0 < p <= 1.
  [[nodiscard]] std::size_t k_of_p(Dyadic const& p);
  //! 2 k (R + 1), available only when k_of_p(p) == 3. Throws Unsupported
  //! otherwise.
  [[nodiscard]] std::size_t f_of_p(Dyadic const& p);

}  // namespace latcd

#endif  // LATCD_ENUMERATION_HPP_
