#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nil2 {

// Exit codes: 0 yes/valid/equivalent, 1 no/distinct, 2 undetermined over Q,
// 64 usage error, 65 input error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nil2
