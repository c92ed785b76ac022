#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hypmetric::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kSuccess = 0, kClaimFailed = 1, kUsage = 2 };

/// Runs one command line (without the program name). Reports go to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypmetric::cli
