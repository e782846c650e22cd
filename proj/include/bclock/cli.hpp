#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bclock::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDomain = 3,
  kNonConvergence = 4,
};

/// Runs one command line (without the program name) and writes the result
/// to `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bclock::cli
