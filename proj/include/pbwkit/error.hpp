#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pbwkit {

enum class ErrorCode {
  AmbientMismatch,
  DimensionMismatch,
  DivisionByZero,
  FieldMismatch,
  NotAssociative,
  BadUnit,
  AlgebraMismatch,
  NotBimodule,
  NotProjective,
  NotAutomorphism,
  RNotSubbimodule,
  NotFreeRight,
  RelationsNotStable,
  NotClassicallyKoszul,
  BraidingNotBijective,
  EquivarianceFailed,
  NotSmashShape,
  SplittingMissing,
  HomotopySolveFailed,
  Pdim2PreconditionFailed,
  NoFreeGenerator,
  SigmaNotAutomorphism,
  DimMismatch,
  EOutsideSpace,
  CapExceeded,
  ParseError,
  ValidationError,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries a code and a human-readable
// witness (the offending indices, vectors or line number).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& witness)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + witness),
        code_(code),
        witness_(witness) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::string witness_;
};

}  // namespace pbwkit
