#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ramify {

enum ExitCode : int {
  kExitOk = 0,
  kExitRejected = 1,
  kExitParse = 2,
  kExitLimit = 3,
  kExitInconsistent = 4,
};

/// Runs one command. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ramify
