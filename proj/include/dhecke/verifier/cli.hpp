#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dhecke {

/// Exit codes shared by every verb.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitShortfall = 2, kExitBadInput = 3 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dhecke
