#pragma once

#include <stdexcept>
#include <string>

namespace pythsix {

enum class ErrorKind {
  DivisionByZero,
  IncompatibleTowers,
  NegativeRadicand,
  TowerDepthExceeded,
  NotRepresentable,
  DivisorZero,
  LeadingCoefficientNotInvertible,
  NoSplit,
  HypothesisViolated,
  DegreeOutOfRange,
  InvariantViolated,
  ConstraintViolated,
  NonRealNorm,
  InexactFactorization,
  AntipodalDegeneracy,
  EmptyIntersection,
  PoleSingularity,
  CenterSingularity,
  DegenerateCurve,
  ParseError,
  IoError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` distinguishes the cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pythsix
