#include "nadon/errors.hpp"

namespace nadon {

const char* kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::TwistTooSmall: return "TwistTooSmall";
    case ErrorKind::EmptySubspace: return "EmptySubspace";
    case ErrorKind::NonStabilized: return "NonStabilized";
    case ErrorKind::InvalidFiltration: return "InvalidFiltration";
    case ErrorKind::SingularEvaluation: return "SingularEvaluation";
    case ErrorKind::StepTooCoarse: return "StepTooCoarse";
    case ErrorKind::DivergedMetric: return "DivergedMetric";
    case ErrorKind::WindowTooShort: return "WindowTooShort";
    case ErrorKind::SingularNode: return "SingularNode";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::Io: return "Io";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::StepTooCoarse:
    case ErrorKind::DivergedMetric:
    case ErrorKind::SingularEvaluation:
    case ErrorKind::SingularNode:
      return 3;
    case ErrorKind::NonStabilized:
    case ErrorKind::InvariantViolation:
      return 4;
    default:
      return 2;
  }
}

}  // namespace nadon
