#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace halphen::cli {

// Full command dispatch. Returns 0 on success, 1 on usage errors, 2 on
// rejected parameters, 3 on internal consistency failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace halphen::cli
