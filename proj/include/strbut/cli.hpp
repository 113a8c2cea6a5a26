#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strbut::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs `strbut <subcommand> [flags]`. `args` excludes the program name.
/// Returns 0 on success/PASS, 1 on a failed check, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

} // namespace strbut::cli
