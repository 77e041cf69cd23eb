#ifndef PERMEQ_TOOLS_CLI_HPP
#define PERMEQ_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace permeq::cli {

/// Exit codes: a definitive answer, a usage or precondition error, and an
/// undecided verdict (Unknown or q undecided).
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUndecided = 2;

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace permeq::cli

#endif  // PERMEQ_TOOLS_CLI_HPP
