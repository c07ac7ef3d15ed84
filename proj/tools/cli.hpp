#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gf2max::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // computation error or failed verification
inline constexpr int kExitUsage = 2;    // malformed arguments or input

/// Runs one gf2max command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gf2max::cli
