#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace loadgame {

// Exit status: 0 success, 1 error or failed verification, 2 usage.
// `args` excludes the program name. LOADGAME_WORKERS sets the OpenMP thread count.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace loadgame
