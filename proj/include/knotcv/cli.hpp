#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotcv::cli {

// Exit codes: 0 success, 1 check/verify failure, 2 usage error,
// 3 resource limit exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotcv::cli
