#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fekete::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInputError = 2,
  kExitNoConvergence = 3,
};

// Runs the command line `fekete <args...>` (program name excluded), writing
// reports to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fekete::cli
