#include "porder/error.hpp"

namespace porder {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::GroundSetMismatch: return "GroundSetMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::AcyclicityViolation: return "AcyclicityViolation";
    case ErrorKind::NotPartialOrder: return "NotPartialOrder";
    case ErrorKind::NotStrictPartialOrder: return "NotStrictPartialOrder";
    case ErrorKind::NotCompleteTransitive: return "NotCompleteTransitive";
    case ErrorKind::NotCompleteNegativelyTransitive:
      return "NotCompleteNegativelyTransitive";
    case ErrorKind::NotContinuous: return "NotContinuous";
    case ErrorKind::InteriorNotNegativelyTransitive:
      return "InteriorNotNegativelyTransitive";
    case ErrorKind::InternalContractViolation:
      return "InternalContractViolation";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::NonpositiveEpsilon: return "NonpositiveEpsilon";
    case ErrorKind::ToleranceViolation: return "ToleranceViolation";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
  }
  return "Unknown";
}

}  // namespace porder
