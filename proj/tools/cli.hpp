#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace restheory::cli {

// Exit codes: 0 success, 1 domain failure, 2 usage or parse error.
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace restheory::cli
