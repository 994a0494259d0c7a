#pragma once

#include <iosfwd>

namespace hypcube::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses the command line and runs one subcommand. Reports go to `out` (or
/// the --output file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hypcube::cli
