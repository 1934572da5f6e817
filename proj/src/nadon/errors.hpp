#pragma once

#include <stdexcept>
#include <string>

namespace nadon {

enum class ErrorKind {
  TwistTooSmall,
  EmptySubspace,
  NonStabilized,
  InvalidFiltration,
  SingularEvaluation,
  StepTooCoarse,
  DivergedMetric,
  WindowTooShort,
  SingularNode,
  InvalidConfig,
  Io,
  InvariantViolation,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* kind_name(ErrorKind kind) noexcept;

// Process exit status for an error: 2 validation, 3 numerical guard,
// 4 internal invariant violation.
int exit_code(ErrorKind kind) noexcept;

}  // namespace nadon
