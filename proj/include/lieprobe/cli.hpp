#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lieprobe::cli {

/// Exit codes: 0 success, 1 parse error, 2 validation failure, 3 resource guard.
int run(int argc, char** argv);
/// Same as above with explicit arguments (without the program name) and streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieprobe::cli
