#include "pbwkit/error.hpp"

namespace pbwkit {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::BadUnit: return "BadUnit";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NotBimodule: return "NotBimodule";
    case ErrorCode::NotProjective: return "NotProjective";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::RNotSubbimodule: return "RNotSubbimodule";
    case ErrorCode::NotFreeRight: return "NotFreeRight";
    case ErrorCode::RelationsNotStable: return "RelationsNotStable";
    case ErrorCode::NotClassicallyKoszul: return "NotClassicallyKoszul";
    case ErrorCode::BraidingNotBijective: return "BraidingNotBijective";
    case ErrorCode::EquivarianceFailed: return "EquivarianceFailed";
    case ErrorCode::NotSmashShape: return "NotSmashShape";
    case ErrorCode::SplittingMissing: return "SplittingMissing";
    case ErrorCode::HomotopySolveFailed: return "HomotopySolveFailed";
    case ErrorCode::Pdim2PreconditionFailed: return "Pdim2PreconditionFailed";
    case ErrorCode::NoFreeGenerator: return "NoFreeGenerator";
    case ErrorCode::SigmaNotAutomorphism: return "SigmaNotAutomorphism";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::EOutsideSpace: return "EOutsideSpace";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace pbwkit

#include "pbwkit/verdict.hpp"

namespace pbwkit {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Undecided: return "undecided";
  }
  return "undecided";
}

}  // namespace pbwkit
