#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace anyon {

// Runs the command line front end on args (without the program name).
// Returns 0 on success, 1 for domain violations, 2 for usage or I/O errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace anyon
