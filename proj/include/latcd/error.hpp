#ifndef LATCD_ERROR_HPP_
#define LATCD_ERROR_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace latcd {

  enum class ErrorKind {
    InvalidInput,
    Cycle,
    NotReduced,
    NotBounded,
    NotALattice,
    NotComparable,
    SizeGuard,
    Domain,
    NotAnEdge,
    LengthMismatch,
    NotACongruence,
    NotAGluingEdge,
    Precondition,
    EmptySkeleton,
    Internal,
    NotASublattice,
    ArityMismatch,
    BudgetExceeded,
    Undefined,
    Unsupported,
    Parse,
    Grammar,
  };

  [[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

  //! The single exception type thrown by the library. `what()` reads
  //! "<Kind>: <message>" so it can be surfaced verbatim on one line.
  class Error : public std::runtime_error {
   public:
    using Witness = std::pair<std::uint32_t, std::uint32_t>;

    Error(ErrorKind kind, std::string const& message,
          std::optional<Witness> witness = std::nullopt);

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
    //! Offending element pair, where the error has one (NotALattice).
    [[nodiscard]] std::optional<Witness> witness() const noexcept {
      return witness_;
    }

   private:
    ErrorKind              kind_;
    std::optional<Witness> witness_;
  };

}  // namespace latcd

#endif  // LATCD_ERROR_HPP_
