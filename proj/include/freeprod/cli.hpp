#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace freeprod::cli {

/// Runs one subcommand. `args` excludes the program name. Exit codes: 0 pass
/// or solved, 1 violation or no solution, 2 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freeprod::cli
