#pragma once
// cli.hpp - indexradix command-line front end.

#include <iosfwd>
#include <string>
#include <vector>

namespace indexradix::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kMaxCpu = 3,
  kBenchIncorrect = 4,
};

// Runs one invocation; args excludes the program name. Output is written to
// `out` only when the command succeeds.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace indexradix::cli
