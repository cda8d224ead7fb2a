#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pstskit::cli {

/// Runs one command line (without the program name). Reports go to out as
/// key=value lines, diagnostics and timing to err. Returns the exit code:
/// 0 yes/success, 1 proved no, 2 unknown, 3 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pstskit::cli
