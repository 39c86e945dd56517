#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ggd {

/// Exit codes of the `ggd` tool.
inline constexpr int kExitOk = 0;
/// A property is false, a validator failed, or a precondition refused.
inline constexpr int kExitFalse = 1;
/// Bad command line, unreadable file, parse error, bad literal.
inline constexpr int kExitUsage = 2;

/// Runs one `ggd` command. `args` excludes the program name. Reports go to
/// `out`, usage and parse errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ggd
