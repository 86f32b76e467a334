#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coisocap::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kParseError = 2,
  kVerifyFailure = 3,
};

// Runs one invocation. argv[0] is the program name. Results go to `out`,
// diagnostics and timing to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace coisocap::cli
