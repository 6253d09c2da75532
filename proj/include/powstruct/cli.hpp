#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace powstruct {

// Exit codes of the command line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitComputation = 2;

// Runs one command line (without the program name). Output goes to `out`,
// diagnostics and errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powstruct
