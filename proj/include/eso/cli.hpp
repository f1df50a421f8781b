#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eso {

enum ExitCode : int { kExitYes = 0, kExitNo = 1, kExitUsage = 2, kExitBudget = 3 };

/// Runs one command. `args` excludes the program name. JSON goes to `out`,
/// messages to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eso
