#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace baxter {

/// Runs the command line tool. `args` excludes the program name. Returns 0
/// for success or YES, 1 for NO or a refutation, 2 for usage and input errors.
int run_cli(std::vector<std::string> const& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace baxter
