#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcoh {

// Exit codes: 0 success, 1 theorem suite failure, 2 usage or input error, 3 internal inconsistency.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcoh
