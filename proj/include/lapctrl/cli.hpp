#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lapctrl::cli {

// Exit codes shared by run() and the binary.
inline constexpr int kExitOk = 0;             // success / verified controllable
inline constexpr int kExitNotControllable = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitGuardExceeded = 3;

/// Dispatches one command (args exclude the program name) and writes the
/// report to `out` (or to the file named by --out). Errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lapctrl::cli
