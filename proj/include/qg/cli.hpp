#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qg::cli {

// Runs one subcommand.  `args` excludes the program name.  Returns the
// process exit code: 0 for ok, 1 when the computation succeeded but the
// mathematical answer is negative, 2 on parse or I/O problems.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qg::cli
