#pragma once

#include <stdexcept>
#include <string>

namespace besselgauss {

/// Raised when an argument violates a precondition (negative order,
/// non-positive beta, non-finite input, malformed range).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a well-formed request cannot be evaluated reliably.
class EvaluationError : public std::runtime_error {
 public:
  enum class Reason {
    Overflow,       // beta below the floor, or an intermediate left double range
    CapExceeded,    // m or n above the exactness cap
    NoConvergence,  // quadrature exhausted its subdivision budget
  };

  EvaluationError(Reason reason, const std::string& what)
      : std::runtime_error(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

inline const char* to_string(EvaluationError::Reason r) noexcept {
  switch (r) {
    case EvaluationError::Reason::Overflow: return "overflow";
    case EvaluationError::Reason::CapExceeded: return "cap";
    case EvaluationError::Reason::NoConvergence: return "noconv";
  }
  return "unknown";
}

}  // namespace besselgauss
