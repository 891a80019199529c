#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gwp1 {

// Entry point shared by the gwp1 executable and the tests. args excludes the
// program name. Exit codes: 0 success, 1 an identity or route check failed,
// 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwp1
