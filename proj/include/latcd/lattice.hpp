#ifndef LATCD_LATTICE_HPP_
#define LATCD_LATTICE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "latcd/bitset.hpp"
#include "latcd/error.hpp"

namespace latcd {

  using ElementId = std::uint32_t;
  //! A cover pair (lo, hi) with lo ≺ hi.
  using Edge = std::pair<ElementId, ElementId>;

  //! A finite bounded lattice.
  //!
  //! Elements are always numbered along a linear extension of the order, so
  //! every cover pair ascends numerically, the bottom is 0 and the top is
  //! size() - 1. The order is stored as packed up-set and down-set rows;
  //! join and meet tables are filled eagerly. Values are immutable once
  //! built.
  class Lattice {
   public:
    //! Validates and builds a lattice from an arbitrary labelling of its
    //! cover relation. Elements are relabelled into a linear extension
    //! (ties broken by the smaller input id). `labels`, when given, names
    //! input element i as labels[i]; those names are what origin() reports
    //! and what diagnostics mention.
    //!
    //! Throws Error with kind Cycle, NotReduced, NotBounded or NotALattice
    //! (the latter carrying the first offending pair in label order).
    static Lattice from_covers(std::size_t n, std::vector<Edge> const& covers,
                               std::vector<ElementId> const& labels = {});

    //! Builds a lattice from a partial order given by up-set rows
    //! (up[x] = {y : x ≤ y}).
    static Lattice from_order(std::vector<Bitset> const& up,
                              std::vector<ElementId> const& labels = {});

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] ElementId   bottom() const noexcept { return 0; }
    [[nodiscard]] ElementId   top() const noexcept {
      return static_cast<ElementId>(n_ - 1);
    }

    [[nodiscard]] bool leq(ElementId x, ElementId y) const noexcept {
      return up_[x].test(y);
    }
    [[nodiscard]] bool lt(ElementId x, ElementId y) const noexcept {
      return x != y && up_[x].test(y);
    }
    [[nodiscard]] bool comparable(ElementId x, ElementId y) const noexcept {
      return up_[x].test(y) || up_[y].test(x);
    }
    [[nodiscard]] ElementId join(ElementId x, ElementId y) const noexcept {
      return join_[x * n_ + y];
    }
    [[nodiscard]] ElementId meet(ElementId x, ElementId y) const noexcept {
      return meet_[x * n_ + y];
    }
    //! True iff lo ≺ hi.
    [[nodiscard]] bool is_edge(ElementId lo, ElementId hi) const noexcept {
      return upper_bits_[lo].test(hi);
    }

    [[nodiscard]] Bitset const& up_set(ElementId x) const noexcept {
      return up_[x];
    }
    [[nodiscard]] Bitset const& down_set(ElementId x) const noexcept {
      return down_[x];
    }
    [[nodiscard]] std::vector<ElementId> const&
    lower_covers(ElementId x) const noexcept {
      return lower_[x];
    }
    [[nodiscard]] std::vector<ElementId> const&
    upper_covers(ElementId x) const noexcept {
      return upper_[x];
    }
    //! All edges, sorted lexicographically.
    [[nodiscard]] std::vector<Edge> const& covers() const noexcept {
      return covers_;
    }

    //! Label each element carried in the object it was built from.
    [[nodiscard]] std::span<ElementId const> origin() const noexcept {
      return origin_;
    }
    [[nodiscard]] ElementId origin(ElementId x) const noexcept {
      return origin_[x];
    }
    //! Internal id of the element whose origin label is `label`, or size().
    [[nodiscard]] ElementId find_origin(ElementId label) const noexcept;

   private:
    Lattice() = default;
    static Lattice build(std::size_t n, std::vector<Edge> covers,
                         std::vector<ElementId> origin);

    std::size_t                         n_ = 0;
    std::vector<Bitset>                 up_;
    std::vector<Bitset>                 down_;
    std::vector<Bitset>                 upper_bits_;
    std::vector<ElementId>              join_;
    std::vector<ElementId>              meet_;
    std::vector<Edge>                   covers_;
    std::vector<std::vector<ElementId>> lower_;
    std::vector<std::vector<ElementId>> upper_;
    std::vector<ElementId>              origin_;
  };

  //! Cover-count classification of the elements of a lattice.
  struct ElementProfile {
    std::vector<ElementId>   jir;  // exactly one lower cover
    std::vector<ElementId>   mir;  // exactly one upper cover
    std::vector<ElementId>   jr;   // more than one lower cover
    std::vector<ElementId>   mr;   // more than one upper cover
    std::vector<ElementId>   nar;  // comparable with every element
    std::vector<std::size_t> nlc;
    std::vector<std::size_t> nuc;
  };

  [[nodiscard]] ElementProfile profile(Lattice const& L);

  [[nodiscard]] bool is_chain(Lattice const& L);
  [[nodiscard]] bool is_modular(Lattice const& L);
  [[nodiscard]] bool is_semimodular(Lattice const& L);
  [[nodiscard]] bool is_distributive(Lattice const& L);

  //! Elements comparable with every element.
  [[nodiscard]] Bitset narrows(Lattice const& L);

  //! The order dual. Element x of the result has origin n - 1 - x, i.e. the
  //! element of L it came from.
  [[nodiscard]] Lattice dual(Lattice const& L);

  [[nodiscard]] bool is_sublattice(Lattice const& L, Bitset const& subset);

  //! The sublattice on `subset`; origin() maps back to ids of L.
  //! Throws NotASublattice if `subset` is empty or not closed under ∨ and ∧.
  [[nodiscard]] Lattice sublattice(Lattice const& L, Bitset const& subset);

  //! [u, v] as a lattice; origin() maps back to ids of L.
  //! Throws NotComparable unless u ≤ v.
  [[nodiscard]] Lattice interval(Lattice const& L, ElementId u, ElementId v);

  //! Whether the intervals [e0.first, e0.second] and [e1.first, e1.second]
  //! are transposed. Throws NotComparable if either is not an interval.
  [[nodiscard]] bool transposed(Lattice const& L, Edge e0, Edge e1);

  //! L with element x renamed perm[x] before relabelling into a linear
  //! extension. `perm` must be a permutation of [0, n).
  [[nodiscard]] Lattice relabel(Lattice const& L,
                                std::vector<ElementId> const& perm);

  //! Longest-chain distance from the bottom.
  [[nodiscard]] std::vector<std::size_t> depths(Lattice const& L);

}  // namespace latcd

#endif  // LATCD_LATTICE_HPP_
