#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace reescov::cli {

/// Exit codes of the reescov tool.
enum ExitCode : int {
  kOk = 0,
  kPredictionFailed = 1,
  kInputError = 2,
  kResourceLimit = 3,
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reescov::cli
