#pragma once

#include <iosfwd>

namespace symarr::cli {

/// Exit codes: 0 success (or a Γ-arrangement for analyze), 1 negative
/// result or refusal, 2 error.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kError = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symarr::cli
