#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aoi::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kInfeasible = 2,
  kVerificationFailed = 3,
};

/// Runs the aoi-sched command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aoi::cli
