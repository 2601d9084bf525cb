#pragma once

#include <ostream>

namespace misinfo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;  // bad flags, invalid or unreadable inputs
inline constexpr int kExitIo = 3;     // failure writing outputs

/// Entry point of the `misinfo` tool. Subcommands: run, trust, survey-dist,
/// eval. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace misinfo::cli
