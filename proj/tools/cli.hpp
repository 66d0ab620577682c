#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace divgraph::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2, kGuardRefused = 3 };

/// Runs the command line `args` (without the program name), writing the
/// result to `out` (or the --out file) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace divgraph::cli
