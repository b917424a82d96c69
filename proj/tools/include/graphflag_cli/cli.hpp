#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphflag::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitSizeLimit = 2;
inline constexpr int kExitSelftestFailed = 3;

// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphflag::cli
