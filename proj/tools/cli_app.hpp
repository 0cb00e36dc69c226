#ifndef STIELTJES_TOOLS_CLI_APP_HPP
#define STIELTJES_TOOLS_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace stieltjes::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 1 when a verification fails, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stieltjes::cli

#endif  // STIELTJES_TOOLS_CLI_APP_HPP
