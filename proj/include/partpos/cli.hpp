#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace partpos {

// Exit codes: 0 success, 1 verification or table mismatch, 2 usage or
// parameter error. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace partpos
