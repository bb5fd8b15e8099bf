#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gsp4 {

// Runs the command-line front end. Exit codes: 0 success, 1 check failure,
// 2 usage error, 3 unknown value requested as a scalar.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gsp4
