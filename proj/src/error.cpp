#include "latcd/error.hpp"

namespace latcd {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::InvalidInput: return "InvalidInput";
      case ErrorKind::Cycle: return "CycleError";
      case ErrorKind::NotReduced: return "NotReduced";
      case ErrorKind::NotBounded: return "NotBounded";
      case ErrorKind::NotALattice: return "NotALattice";
      case ErrorKind::NotComparable: return "NotComparable";
      case ErrorKind::SizeGuard: return "SizeGuard";
      case ErrorKind::Domain: return "DomainError";
      case ErrorKind::NotAnEdge: return "NotAnEdge";
      case ErrorKind::LengthMismatch: return "LengthMismatch";
      case ErrorKind::NotACongruence: return "NotACongruence";
      case ErrorKind::NotAGluingEdge: return "NotAGluingEdge";
      case ErrorKind::Precondition: return "PreconditionError";
      case ErrorKind::EmptySkeleton: return "EmptySkeleton";
      case ErrorKind::Internal: return "InternalError";
      case ErrorKind::NotASublattice: return "NotASublattice";
      case ErrorKind::ArityMismatch: return "ArityMismatch";
      case ErrorKind::BudgetExceeded: return "BudgetExceeded";
      case ErrorKind::Undefined: return "Undefined";
      case ErrorKind::Unsupported: return "Unsupported";
      case ErrorKind::Parse: return "ParseError";
      case ErrorKind::Grammar: return "GrammarError";
    }
    return "Error";
  }

  Error::Error(ErrorKind kind, std::string const& message,
               std::optional<Witness> witness)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(witness) {}

}  // namespace latcd
