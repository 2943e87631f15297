#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stargenus::cli {

/// Exit codes: 0 yes / success, 1 no, 2 error.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kError = 2;

/// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace stargenus::cli
