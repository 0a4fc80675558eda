#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oneq::cli {

/// Exit codes shared by every verb.
enum ExitCode : int {
  kOk = 0,            // success or positive decision
  kEnvironment = 1,   // I/O failure
  kInput = 2,         // malformed input, bad flags, dimension mismatch
  kNegative = 3,      // negative mathematical outcome
};

/// Runs one `oneq` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oneq::cli
