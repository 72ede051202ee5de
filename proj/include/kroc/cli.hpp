#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kroc::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kDegenerateData = 3,
  kUsageError = 4,
};

// Runs the kroc command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kroc::cli
