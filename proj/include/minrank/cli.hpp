#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minrank::cli {

// Runs one CLI invocation (args exclude the program name). Exit codes:
// 0 success, 1 usage error, 2 engine abort (degree cap), 3 invariant
// violation detected.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace minrank::cli
