#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace superjac {

// Every failure the library reports carries one of these codes. The CLI maps
// them to exit statuses and machine-readable error objects.
enum class ErrorCode {
  NotPrime,
  NoIrreducibleFound,
  FieldMismatch,
  DivisionByZero,
  ZeroPolynomial,
  DegreeOverflow,
  InexactDivision,
  GcdViolation,
  Singular,
  WildCharacteristic,
  DegreeTooSmall,
  ScanBoundExceeded,
  NotHyperelliptic,
  NotTriagonal,
  RankDeficient,
  DerivativeSingular,
  IdenticallyZero,
  AmbiguousLift,
  NonGeneric,
  NotOnCurve,
  NotReduced,
  ConjugatePair,
  DegreeMismatch,
  RepeatedNode,
  NotLinearInY,
  PreconditionFailed,
  ParseError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string stage = {})
      : std::runtime_error(std::move(message)), code_(code), stage_(std::move(stage)) {}

  ErrorCode code() const noexcept { return code_; }

  // Pipeline stage that raised the error ("interpolation", "lift", ...), or empty.
  const std::string& stage() const noexcept { return stage_; }

  // True for the failure modes a caller can get around by choosing other inputs.
  bool is_non_generic() const noexcept;

 private:
  ErrorCode code_;
  std::string stage_;
};

[[noreturn]] inline void fail(ErrorCode code, std::string message, std::string stage = {}) {
  throw Error(code, std::move(message), std::move(stage));
}

}  // namespace superjac
