#ifndef LATCD_STRUCTURE_HPP_
#define LATCD_STRUCTURE_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "latcd/bitset.hpp"
#include "latcd/constructions.hpp"
#include "latcd/lattice.hpp"

namespace latcd {

  //! Skel L = Jr L ∪ Mr L ∪ lower covers of Jr L ∪ upper covers of Mr L.
  struct Skeleton {
    Bitset elements;
    //! The induced sublattice, absent when `elements` is empty (chains).
    //! Its origin() maps back into L.
    std::optional<Lattice> lattice;

    [[nodiscard]] bool        empty() const noexcept { return !lattice.has_value(); }
    [[nodiscard]] std::size_t size() const noexcept { return elements.count(); }
  };

  [[nodiscard]] Skeleton skeleton(Lattice const& L);

  //! Σ_{x ∈ Jr L} (nlc x + 1) + Σ_{x ∈ Mr L} (nuc x + 1).
  [[nodiscard]] std::size_t reducibility_number(Lattice const& L);

  //! Edges whose endpoints are both narrows, sorted.
  [[nodiscard]] std::vector<Edge> gluing_edges(Lattice const& L);

  //! idl a ∔ fil b. Throws NotAGluingEdge.
  [[nodiscard]] Lattice collapse_gluing_edge(Lattice const& L, Edge edge);

  enum class CollapseOrder { Smallest, Largest };

  //! Collapses gluing edges one at a time, picking the lexicographically
  //! smallest (or largest) remaining one, until none is left.
  [[nodiscard]] Lattice core(Lattice const& L,
                             CollapseOrder  order = CollapseOrder::Smallest);

  //! Whether 0 ∈ Mr L and 1 ∈ Jr L.
  [[nodiscard]] bool has_reducible_bounds(Lattice const& L);

  //! (dne x, upe x): the largest skeleton element below x and the smallest
  //! one above it. Throws Precondition unless has_reducible_bounds(L).
  [[nodiscard]] std::pair<ElementId, ElementId> projections(Lattice const& L,
                                                            ElementId      x);

  //! [min Skel L, max Skel L]; origin() maps into L.
  //! Throws EmptySkeleton.
  [[nodiscard]] Lattice truncate_to_skeleton_span(Lattice const& L);

  struct SkeletonDecomposition {
    Lattice                skeleton;
    std::vector<ElementId> embedding;  // skeleton id -> id in L
    EdgeEnumeration        pi;         // edges of `skeleton`, in its own ids
    ExtensionVector        s;
  };

  //! The skeleton, its edges in lexicographic order and the number of
  //! elements strictly inside each edge's interval in L, so that
  //! multi_point_extension(skeleton, pi, s) ≅ L. Throws Precondition unless
  //! has_reducible_bounds(L); throws Internal if a skeleton edge spans a
  //! non-chain interval.
  [[nodiscard]] SkeletonDecomposition skeleton_coordinates(Lattice const& L);

  //! Whether L is reachable from the sublattice `sub` by adding one element at
  //! a time through sublattices. Exhaustive backtracking over removable
  //! elements, memoised on the remaining set. Throws NotASublattice.
  [[nodiscard]] bool is_dismantlable_extension(Lattice const& L,
                                               Bitset const&  sub);

  //! First pair (i, j), i < j, in lexicographic order with tuples[i] ≤
  //! tuples[j] componentwise, 0-indexed. Throws ArityMismatch.
  [[nodiscard]] std::optional<std::pair<std::size_t, std::size_t>>
  find_dominating_pair(std::vector<std::vector<std::size_t>> const& tuples);

  //! Some u has k distinct covers whose pairwise joins coincide, i.e. an M_k
  //! sublattice whose lower k edges are edges of L.
  [[nodiscard]] bool has_mk_configuration(Lattice const& L, std::size_t k);
  //! The order-dual configuration (upper k edges are edges of L).
  [[nodiscard]] bool has_dual_mk_configuration(Lattice const& L, std::size_t k);

  //! max over x of max(nlc x, nuc x).
  [[nodiscard]] std::size_t max_cover_count(Lattice const& L);

}  // namespace latcd

#endif  // LATCD_STRUCTURE_HPP_
