#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mstinf {

/// Runs the command-line tool in-process. `args` excludes the program
/// name. Returns the process exit code: 0 success or positive verdict,
/// 1 negative verdict, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace mstinf
