#pragma once

#include <ostream>

namespace nckc::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitValidation = 4;

/// Runs the command line (argv[0] is the program name). Results go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nckc::cli
