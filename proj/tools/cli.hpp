#pragma once

#include <iosfwd>

namespace tetrad::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kAxiomFailure = 1;
inline constexpr int kHarmonicityFailure = 2;
inline constexpr int kInputError = 3;
inline constexpr int kUsageError = 4;
inline constexpr int kModelInvalid = 5;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tetrad::cli
