#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclebetti::cli {

enum ExitCode : int {
  kPass = 0,
  kCheckFailure = 1,
  kUsage = 2,
};

/// Runs the command line `args` (program name excluded). Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "5", "5..8" into an inclusive range. Throws Error(Parse).
std::pair<int, int> parse_n_range(const std::string& text);

}  // namespace cyclebetti::cli
