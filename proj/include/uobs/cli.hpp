#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uobs {

// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitUsage = 64;

// Runs one command line (without the program name). Reports go to out,
// diagnostics and usage text to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uobs
