#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coneforge::cli {

/// Exit codes: 0 success or passing report, 1 residual failure, 2 usage or
/// input error. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coneforge::cli
