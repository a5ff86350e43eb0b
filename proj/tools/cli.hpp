#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace draim::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kFailure = 1,  // domain or solver failure
  kUsage = 2,    // bad flags, unreadable or invalid input
};

// Runs the command line. `args` excludes the program name. Machine-readable
// output goes to `out` only on success; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace draim::cli
