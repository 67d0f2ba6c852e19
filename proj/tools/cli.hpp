#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unpol::cli {

enum ExitCode : int {
  kUnpolarized = 0,  // also plain success
  kPolarized = 1,
  kInputError = 2,
};

/// Runs `unpol <args...>`. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unpol::cli
