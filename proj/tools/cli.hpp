#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stirap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

/// Runs the command line `args` (without the program name). Summaries go to
/// `out`, warnings and errors to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stirap::cli
