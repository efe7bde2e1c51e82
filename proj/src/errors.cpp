#include "pythsix/errors.hpp"

namespace pythsix {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::IncompatibleTowers: return "IncompatibleTowers";
    case ErrorKind::NegativeRadicand: return "NegativeRadicand";
    case ErrorKind::TowerDepthExceeded: return "TowerDepthExceeded";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::DivisorZero: return "DivisorZero";
    case ErrorKind::LeadingCoefficientNotInvertible: return "LeadingCoefficientNotInvertible";
    case ErrorKind::NoSplit: return "NoSplit";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::InvariantViolated: return "InvariantViolated";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::NonRealNorm: return "NonRealNorm";
    case ErrorKind::InexactFactorization: return "InexactFactorization";
    case ErrorKind::AntipodalDegeneracy: return "AntipodalDegeneracy";
    case ErrorKind::EmptyIntersection: return "EmptyIntersection";
    case ErrorKind::PoleSingularity: return "PoleSingularity";
    case ErrorKind::CenterSingularity: return "CenterSingularity";
    case ErrorKind::DegenerateCurve: return "DegenerateCurve";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace pythsix
