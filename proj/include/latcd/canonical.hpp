#ifndef LATCD_CANONICAL_HPP_
#define LATCD_CANONICAL_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "latcd/lattice.hpp"

namespace latcd {

  //! Byte string identifying a lattice up to isomorphism. Equal codes mean
  //! isomorphic lattices and vice versa.
  class CanonicalCode {
   public:
    CanonicalCode() = default;
    explicit CanonicalCode(std::vector<std::uint8_t> bytes)
        : bytes_(std::move(bytes)) {}

    [[nodiscard]] std::vector<std::uint8_t> const& bytes() const noexcept {
      return bytes_;
    }
    //! Lowercase hex.
    [[nodiscard]] std::string hex() const;
    static CanonicalCode      from_hex(std::string_view hex);

    friend auto operator<=>(CanonicalCode const&, CanonicalCode const&) = default;
    friend bool operator==(CanonicalCode const&, CanonicalCode const&) = default;

   private:
    std::vector<std::uint8_t> bytes_;
  };

  struct CanonicalCodeHash {
    std::size_t operator()(CanonicalCode const& c) const noexcept;
  };

  //! Canonical relabelling: result[x] is the canonical position of x.
  //!
  //! Elements are first split into cells by iterated refinement of
  //! (depth, height, cover counts, neighbour colours); cells are ordered by
  //! depth so every admissible labelling is a linear extension. The code is
  //! the lexicographically least upper-triangular order matrix over all
  //! labellings that respect the cell order, found by a backtracking search
  //! that keeps only minimal columns and skips interchangeable twins.
  [[nodiscard]] std::vector<ElementId> canonical_labeling(Lattice const& L);

  [[nodiscard]] CanonicalCode canonical_form(Lattice const& L);

  [[nodiscard]] bool is_isomorphic(Lattice const& L, Lattice const& K);

}  // namespace latcd

#endif  // LATCD_CANONICAL_HPP_
