// The lensball command line: subcommands cf, tree, wahl, diagram, invariants,
// covers, verify and suite. JSON goes to `out`, diagnostics to `err`.
// Exit codes: 0 pass, 1 verification failure, 2 usage error.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lensball::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lensball::cli
