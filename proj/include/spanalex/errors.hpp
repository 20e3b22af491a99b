#pragma once

#include <stdexcept>
#include <string>

namespace spanalex {

enum class ErrorCode {
  InvalidInput,
  SyntaxError,
  BoundaryMismatch,
  DimensionMismatch,
  DivisionByZero,
  ZeroPolynomial,
  ZeroEvaluationPoint,
  PoleAtSpecialization,
  NotAKnot,
  InternalInconsistency,
  ConvergenceFailure,
  InfiniteSlope,
  NotRationalShape,
  TrivialColoring,
  DegeneratePlane,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace spanalex
