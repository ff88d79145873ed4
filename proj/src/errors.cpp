#include "symarr/errors.hpp"

namespace symarr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::ClosureExceedsCap: return "ClosureExceedsCap";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::PointCountMismatch: return "PointCountMismatch";
    case ErrorKind::ZeroArrangement: return "ZeroArrangement";
    case ErrorKind::ZeroSpace: return "ZeroSpace";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotEquivalent: return "NotEquivalent";
    case ErrorKind::SpaceNotInvariant: return "SpaceNotInvariant";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::UnsupportedRankDeficient: return "UnsupportedRankDeficient";
    case ErrorKind::UnsupportedReducible: return "UnsupportedReducible";
    case ErrorKind::V1NotFixed: return "V1NotFixed";
    case ErrorKind::EmptyFix: return "EmptyFix";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotGammaArrangement: return "NotGammaArrangement";
    case ErrorKind::NotDeformationEquivalent: return "NotDeformationEquivalent";
    case ErrorKind::PathVerificationFailed: return "PathVerificationFailed";
    case ErrorKind::NotSpecialOrthogonal: return "NotSpecialOrthogonal";
    case ErrorKind::DegenerateComplement: return "DegenerateComplement";
    case ErrorKind::GroundTooLarge: return "GroundTooLarge";
  }
  return "Unknown";
}

}  // namespace symarr
