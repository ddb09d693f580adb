#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace springer {

/// Dispatches one CLI invocation.  Exit codes: 0 success / all verified,
/// 1 a verification found a counterexample, 2 invalid input, 3 enumeration
/// budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace springer
