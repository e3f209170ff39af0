#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace powersums {

// Runs one CLI invocation: args is argv without the program name.  Results go
// to out, diagnostics to err.  Returns the process exit status: 0 on success,
// 1 on verification mismatch or internal consistency failure, 2 on usage
// errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace powersums
