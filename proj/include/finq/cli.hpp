#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace finq::cli {

// Dispatch a full command line (without argv[0]). Returns the process exit
// code: 0 success, 1 validation/usage error, 2 numerical-tolerance failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace finq::cli
