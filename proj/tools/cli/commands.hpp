#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace irrseq {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitEnvironment = 2;
inline constexpr int kExitUsage = 64;

/// Runs the command line `args` (program name excluded), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace irrseq
