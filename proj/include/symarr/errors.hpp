#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symarr {

enum class ErrorKind {
  InvalidPermutation,
  ClosureExceedsCap,
  NotTransitive,
  ParseError,
  DimensionMismatch,
  PointCountMismatch,
  ZeroArrangement,
  ZeroSpace,
  RankDeficient,
  TooFewPoints,
  NotNormalized,
  NotEquivalent,
  SpaceNotInvariant,
  VerificationFailed,
  UnsupportedRankDeficient,
  UnsupportedReducible,
  V1NotFixed,
  EmptyFix,
  DecompositionFailed,
  NotInvariant,
  NotIrreducible,
  NotGammaArrangement,
  NotDeformationEquivalent,
  PathVerificationFailed,
  NotSpecialOrthogonal,
  DegenerateComplement,
  GroundTooLarge,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable and is what the
/// CLI maps to diagnostics; `what()` carries a human readable explanation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace symarr
