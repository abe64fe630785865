#pragma once

#include <iosfwd>

namespace nakarig::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBudget = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Entry point of the `nakarig` tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace nakarig::cli
