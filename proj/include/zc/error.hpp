#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zc {

enum class ErrorCode {
  Parse,
  FieldMismatch,
  NotPrime,
  ZeroInput,
  DegreeCap,
  ReducibleModulus,
  ReduciblePolynomial,
  ConstantPolynomial,
  SingularMatrix,
  ZeroForm,
  Reducible,
  XOnlyFactor,
  CommonFactor,
  BothConstant,
  DegenerateFactor,
  NonzeroDegree,
  ZeroCycleInput,
  ConstantFunction,
  PointNotOnCurve,
  SingularCurve,
  AssociativityViolation,
  IdentityViolation,
  DegenerateModule,
  EmptyCover,
  NotInImage,
  NotInKernel,
  Precondition,
  UnknownCommand,
  Internal,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const noexcept { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

// Internal invariant check; a violation means a bug, not bad input.
inline void ensure(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::Internal, what);
}

}  // namespace zc
