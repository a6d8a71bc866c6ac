#include "fibfield/error.hpp"

namespace fibfield {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::BadGroupOrder: return "BadGroupOrder";
    case ErrorCode::BadDivisor: return "BadDivisor";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::SplitContext: return "SplitContext";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DegenerateDiscriminant: return "DegenerateDiscriminant";
    case ErrorCode::SpecialPrime: return "SpecialPrime";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "Unknown";
}

}  // namespace fibfield
