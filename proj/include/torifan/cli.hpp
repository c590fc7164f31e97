#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torifan::cli {

/// Full command-line entry point: args excludes the program name.  Writes
/// reports to out and error messages to err.  Returns 0 when every step
/// passes, 1 when a mathematical assertion fails, 2 on input or usage
/// errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace torifan::cli
