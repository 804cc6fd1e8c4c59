#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vknot::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kPropertyViolation = 2,
  kInternalFailure = 3,
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace vknot::cli
