#pragma once

#include <iosfwd>

namespace stancewalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitUsage = 64;

/// Runs one command line (argv[0] is the program name). Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace stancewalk::cli
