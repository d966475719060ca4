#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sepcover::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kInputError = 2;
inline constexpr int kInvariantError = 3;

// Runs one command line (args[0] is the program name). Reports go to --report or, when
// that is absent, to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sepcover::cli
