#pragma once

#include <iosfwd>

namespace eqlift::cli {

/// Exit codes: 0 all verifications pass, 1 a verification failed, 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eqlift::cli
