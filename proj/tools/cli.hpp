#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ppt::cli {

/// Runs the command line `args` (args[0] is the program name). Returns the
/// process exit code: 0 success, 1 check failure, 2 usage or precondition
/// error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ppt::cli
