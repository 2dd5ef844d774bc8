#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turanforge::cli {

/// Process exit codes.
enum Exit : int {
  kOk = 0,
  /// A refutation was found where certification was requested.
  kRefuted = 1,
  /// Bad flags or invalid arguments.
  kUsage = 2,
  kParse = 3,
  kCapability = 4,
  /// An exact search ran out of budget.
  kBudget = 5,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace turanforge::cli
