#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aaco::cli {

// Runs one CLI invocation; args exclude the program name. Returns the exit
// code: 0 on success, 1 on a domain error, 2 on a usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace aaco::cli
