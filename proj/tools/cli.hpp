#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace itenc::cli {

// Exit status: 0 success/accept, 1 reject/false, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace itenc::cli
