#pragma once

#include <cmath>

#include "symarr/errors.hpp"

namespace symarr {

/// Single numerical threshold shared by every decision in the library.
/// Applied to quantities at unit spectral scale (orthonormal bases,
/// projectors, normalized arrangements); rank decisions use it relative to
/// the largest singular value.
struct Tolerance {
  double eps = 1e-9;

  Tolerance() = default;
  explicit Tolerance(double e) : eps(e) {
    if (!(e > 0.0) || !std::isfinite(e)) {
      throw Error(ErrorKind::ParseError, "tolerance must be a positive finite number");
    }
  }
};

}  // namespace symarr
