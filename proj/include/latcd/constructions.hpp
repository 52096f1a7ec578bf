#ifndef LATCD_CONSTRUCTIONS_HPP_
#define LATCD_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "latcd/congruence.hpp"
#include "latcd/lattice.hpp"

namespace latcd {

  //! An ordering of the edge set of a lattice.
  using EdgeEnumeration = std::vector<Edge>;
  //! Number of points to insert on each edge of an EdgeEnumeration.
  using ExtensionVector = std::vector<std::size_t>;

  //! r ≤ s componentwise. Throws ArityMismatch on different lengths.
  [[nodiscard]] bool componentwise_leq(ExtensionVector const& r,
                                       ExtensionVector const& s);

  //! The n-element chain. Throws Domain for n == 0.
  [[nodiscard]] Lattice chain(std::size_t n);

  //! Componentwise order on K × M. Pair (k, m) has origin k * |M| + m.
  [[nodiscard]] Lattice direct_product(Lattice const& K, Lattice const& M);

  //! B_4 = C_2 × C_2.
  [[nodiscard]] Lattice boolean4();

  //! M atop K with 1_K identified with 0_M. Elements of K keep their ids;
  //! element y of M becomes |K| - 1 + y.
  [[nodiscard]] Lattice glued_sum(Lattice const& K, Lattice const& M);

  //! Left fold of glued_sum. Throws InvalidInput on an empty list.
  [[nodiscard]] Lattice glued_sum_all(std::vector<Lattice> const& parts);

  //! M_k: bottom, k pairwise incomparable atoms, top. Throws Domain for k < 3.
  [[nodiscard]] Lattice m_k(std::size_t k);

  //! N_k: 0 ≺ a_1 ≺ … ≺ a_t ≺ 1 with t = k − 3, plus a common complement b.
  //! Ids: 0 is the bottom, a_i is i, b is t + 1, the top is t + 2.
  //! Throws Domain for k < 5.
  [[nodiscard]] Lattice n_k(std::size_t k);

  //! Θ_i on n_k(k) (1 ≤ i ≤ t − 1): blocks {a_1..a_i}, {a_{i+1}..a_t} and
  //! singletons. Throws Domain outside that range.
  [[nodiscard]] Congruence n_k_theta(std::size_t k, std::size_t i);

  //! N_k ∔ B_4 ∔ … ∔ B_4 with n copies of B_4.
  [[nodiscard]] Lattice l_k_n(std::size_t k, std::size_t n);

  struct OnePointExtension {
    Lattice   lattice;
    ElementId inserted;  // id of the new element in `lattice`
  };

  //! Inserts one doubly irreducible element on the edge (u, v). Old element
  //! x has origin x in the result; the new element has origin |L|.
  //! Throws NotAnEdge.
  [[nodiscard]] OnePointExtension one_point_extension_with_id(Lattice const& L,
                                                              Edge edge);
  [[nodiscard]] Lattice one_point_extension(Lattice const& L, Edge edge);

  //! Inserts s_i new elements on edge e_i, edges taken in the order of `pi`
  //! and points added bottom-up within an edge. Old element x keeps origin
  //! x; inserted elements get origins |L|, |L| + 1, … in insertion order.
  //! Throws LengthMismatch if |pi| != |s| or |pi| != |Edge L|, and
  //! NotAnEdge if pi is not an enumeration of Edge L.
  [[nodiscard]] Lattice multi_point_extension(Lattice const&         L,
                                              EdgeEnumeration const& pi,
                                              ExtensionVector const& s);

}  // namespace latcd

#endif  // LATCD_CONSTRUCTIONS_HPP_
