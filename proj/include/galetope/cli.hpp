#pragma once

#include <string>
#include <vector>

namespace galetope {

// Exit status: 0 success or all checks pass, 1 some check failed,
// 2 usage or input error, 3 not-polytopal / degenerate / infeasible.
int run_cli(const std::vector<std::string>& args);

} // namespace galetope
