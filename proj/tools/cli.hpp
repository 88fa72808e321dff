#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace floer::cli {

// Exit codes: 0 every check passed, 1 a verification failed, 2 bad usage,
// parse or validation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace floer::cli
