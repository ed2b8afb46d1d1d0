#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace raag::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUndecided = 2;
inline constexpr int kExitParse = 64;
inline constexpr int kExitCap = 65;
inline constexpr int kExitInvariant = 70;

/// Runs one command line (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace raag::cli
