#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dqg::cli {

/// Exit statuses.
enum Status : int { pass = 0, negative = 1, inconclusive = 2, usage = 3 };

/// Runs one subcommand. `args` excludes the program name. The report goes to
/// `out` on statuses 0 to 2; usage and parse errors go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dqg::cli
