#ifndef HISTCOMB_TOOLS_CLI_HPP
#define HISTCOMB_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "histcomb/common.hpp"

namespace histcomb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

// Largest derivation trace (in printed nodes) the CLI will render. Shared
// subtrees make the tree cheap to build but its expansion can be enormous.
inline constexpr std::uint64_t kMaxTraceNodes = 1'000'000;

// Name of the environment variable overriding Limits::n_max.
inline constexpr const char* kNMaxEnv = "HISTCOMB_N_MAX";

// Limits with n_max taken from HISTCOMB_N_MAX when set. Throws
// std::invalid_argument if the variable is not a positive integer.
Limits limits_from_environment();

// Runs one invocation. `args` excludes the program name. Results go to `out`,
// diagnostics to `err`; the return value is the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace histcomb::cli

#endif  // HISTCOMB_TOOLS_CLI_HPP
