#include "superjac/error.hpp"

namespace superjac {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NoIrreducibleFound: return "NoIrreducibleFound";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::GcdViolation: return "GcdViolation";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::WildCharacteristic: return "WildCharacteristic";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::ScanBoundExceeded: return "ScanBoundExceeded";
    case ErrorCode::NotHyperelliptic: return "NotHyperelliptic";
    case ErrorCode::NotTriagonal: return "NotTriagonal";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::DerivativeSingular: return "DerivativeSingular";
    case ErrorCode::IdenticallyZero: return "IdenticallyZero";
    case ErrorCode::AmbiguousLift: return "AmbiguousLift";
    case ErrorCode::NonGeneric: return "NonGeneric";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::ConjugatePair: return "ConjugatePair";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::RepeatedNode: return "RepeatedNode";
    case ErrorCode::NotLinearInY: return "NotLinearInY";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool Error::is_non_generic() const noexcept {
  switch (code_) {
    case ErrorCode::RankDeficient:
    case ErrorCode::DerivativeSingular:
    case ErrorCode::IdenticallyZero:
    case ErrorCode::AmbiguousLift:
    case ErrorCode::InexactDivision:
    case ErrorCode::NonGeneric:
    case ErrorCode::DegreeOverflow:
      return true;
    default:
      return false;
  }
}

}  // namespace superjac
