#pragma once

#include <iosfwd>

namespace capsched::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kSizeLimit = 3;

/// Runs the capsched command line; returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace capsched::cli
