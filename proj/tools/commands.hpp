#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace leibniz::cli {

/// Runs one command line (without the program name). Returns the exit
/// status: 0 success, 1 a module error or failed verification, 2 a usage or
/// parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leibniz::cli
