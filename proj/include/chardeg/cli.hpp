#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chardeg {

/// Exit codes: 0 success, 1 a check or implication failed, 2 usage, parse
/// or spec errors (including exceeded caps).
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the command line tool; `args` excludes the program name.
int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace chardeg
