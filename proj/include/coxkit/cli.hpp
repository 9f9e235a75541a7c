#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coxkit {

// Runs the coxkit command line (args excludes the program name). Returns 0
// on success, 2 on input or precondition errors, 1 on internal errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace coxkit
