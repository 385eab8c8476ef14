#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankone::cli {

// Exit codes: 0 success, 1 internal error, 2 usage or domain error, 3 verification failure.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankone::cli
