#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bisplit::tool {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kCrossCheck = 2;

/// Runs one invocation. args excludes the program name; "-" as the input
/// path reads from in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bisplit::tool
