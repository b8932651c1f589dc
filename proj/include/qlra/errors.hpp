#pragma once

#include <stdexcept>
#include <string>

namespace qlra {

enum class ErrorCode {
  NotStochastic,
  NotDoublyStochastic,
  NotStrictlyPositive,
  DegenerateProduct,
  NotTrigonometric,
  ExpansionMismatch,
  TheoremViolation,
  GenerationExhausted,
  MalformedInput,
};

const char* to_string(ErrorCode code) noexcept;

/// Domain error with a machine-readable code. The CLI maps codes to exit
/// status: validation failures 2, NOT_TRIGONOMETRIC 3, THEOREM_VIOLATION 4.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qlra
