#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tcover::cli {

/// Exit codes: 0 PASS / success, 1 FAIL, 2 INCONCLUSIVE, 3 usage or input error.
inline constexpr int kExitError = 3;

/// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Accepts a number, "big" (2^12 e^16), "e", or a multiple of e such as "2e" or "4.5e".
double parse_L(const std::string& text);

}  // namespace tcover::cli
