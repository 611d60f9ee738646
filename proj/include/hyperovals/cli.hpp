#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperovals {

/// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hyperovals
