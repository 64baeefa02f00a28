#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geocoh::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

// Runs the command line `args` (without the program name). Reports go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geocoh::cli
