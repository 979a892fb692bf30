#pragma once

#include <iosfwd>

namespace qtwist::cli {

/// Exit codes: 0 success, 1 computation failure, 2 usage or precondition error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv and runs one subcommand. Records go to `out` (or --out);
/// diagnostics and, for csv/json, the timing footer go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qtwist::cli
