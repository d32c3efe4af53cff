#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parabolica::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kRefusal = 3,
  kVerificationFailed = 4,
};

/// Runs one command line (args[0] is the program name). Output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parabolica::cli
