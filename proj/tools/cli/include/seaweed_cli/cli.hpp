#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace seaweed::cli {

enum ExitCode : int {
  kOk = 0,
  kEngineViolation = 1,
  kCounterexample = 2,
  kNotFrobenius = 3,
  kUsage = 64,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seaweed::cli
