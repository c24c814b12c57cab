#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vg {

// Exit codes: 0 success, 1 computation error or failed check, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vg
