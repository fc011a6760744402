#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evframe::cli {

enum ExitCode : int { kSuccess = 0, kDataError = 1, kUsageError = 2 };

/// Runs the evframe command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace evframe::cli
