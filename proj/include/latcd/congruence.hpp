#ifndef LATCD_CONGRUENCE_HPP_
#define LATCD_CONGRUENCE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "latcd/bitset.hpp"
#include "latcd/dyadic.hpp"
#include "latcd/lattice.hpp"

namespace latcd {

  //! A partition of the elements of a lattice, stored as one block index per
  //! element. Blocks are numbered in order of their least element, so two
  //! equal partitions have equal `block_of` vectors.
  struct Congruence {
    std::vector<std::uint32_t> block_of;
    std::uint32_t              block_count = 0;

    //! Renumbers arbitrary block labels into canonical form.
    static Congruence from_labels(std::span<std::uint32_t const> labels);
    //! Δ, the all-singletons partition.
    static Congruence identity(std::size_t n);
    //! ∇, a single block.
    static Congruence total(std::size_t n);

    [[nodiscard]] bool same(ElementId x, ElementId y) const noexcept {
      return block_of[x] == block_of[y];
    }
    [[nodiscard]] std::vector<std::vector<ElementId>> blocks() const;
    //! Every block of *this lies inside a block of `other`.
    [[nodiscard]] bool refines(Congruence const& other) const;

    friend auto operator<=>(Congruence const& a, Congruence const& b) {
      return a.block_of <=> b.block_of;
    }
    friend bool operator==(Congruence const& a, Congruence const& b) {
      return a.block_of == b.block_of;
    }
  };

  //! Common refinement (the meet in Con L).
  [[nodiscard]] Congruence intersect(Congruence const& a, Congruence const& b);

  //! con(a, b): the least congruence collapsing a and b. Union-find closure
  //! driven by a worklist of pairs that caused a merge; each such pair is
  //! translated by every z under ∨ and ∧.
  [[nodiscard]] Congruence principal_congruence(Lattice const& L, ElementId a,
                                                ElementId b);

  //! Whether the partition (any block labels, one per element) is compatible
  //! with ∨ and ∧.
  [[nodiscard]] bool is_congruence(Lattice const&                 L,
                                   std::span<std::uint32_t const> partition);

  inline constexpr std::size_t kBruteforceMaxSize = 9;

  //! Every congruence by filtering all set partitions (restricted growth
  //! strings). Throws SizeGuard above kBruteforceMaxSize elements.
  [[nodiscard]] std::vector<Congruence>
  all_congruences_bruteforce(Lattice const& L);

  //! A quasiorder on a list of elements; below[i].test(j) means ground[i] ⪯
  //! ground[j].
  struct QuasiOrder {
    std::vector<ElementId> ground;
    std::vector<Bitset>    below;

    [[nodiscard]] std::size_t size() const noexcept { return ground.size(); }
    [[nodiscard]] bool        leq(std::size_t i, std::size_t j) const noexcept {
      return below[i].test(j);
    }
  };

  //! (Jir L; ⪯) where a ⪯ b iff con(ȧ, a) ⊆ con(ḃ, b).
  [[nodiscard]] QuasiOrder jir_quasiorder(Lattice const& L);

  //! Number of down-closed subsets of a quasiordered set.
  [[nodiscard]] BigInt count_ideals(QuasiOrder const& q);

  //! |Con L|, via ideals of the join-irreducible quasiorder.
  [[nodiscard]] BigInt con_count(Lattice const& L);

  //! |Con L| / 2^(|L| - 1).
  [[nodiscard]] Dyadic congruence_density(Lattice const& L);

  //! L/Θ; element i of the result has origin i, the block index.
  //! Throws NotACongruence.
  [[nodiscard]] Lattice quotient(Lattice const& L, Congruence const& theta);

  inline constexpr std::size_t kCongruenceLatticeBound = 1024;

  //! Con L as the lattice of ideals of (Jir L; ⪯) under inclusion.
  //! Throws SizeGuard if |Con L| exceeds `bound`.
  [[nodiscard]] Lattice congruence_lattice(Lattice const& L,
                                           std::size_t bound
                                           = kCongruenceLatticeBound);

}  // namespace latcd

#endif  // LATCD_CONGRUENCE_HPP_
