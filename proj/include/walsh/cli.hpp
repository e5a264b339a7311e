#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace walsh {

/// Runs the command line (args[0] is the program name). Returns the exit
/// code: 0 success, 1 verification failure, 2 usage or range error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace walsh
