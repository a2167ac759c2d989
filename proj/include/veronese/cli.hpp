#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace veronese {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // unexpected internal error
  kExitUsage = 2,
  kExitRange = 3,  // parameter, range, structure and domain errors
  kExitGuard = 4,
};

/// Runs one CLI invocation. `args` excludes the program name. The document
/// (or a JSON error object) goes to `out`; diagnostics go to `err`.
int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace veronese
