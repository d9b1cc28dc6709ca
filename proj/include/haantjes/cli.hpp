#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace haantjes::cli {

// Exit codes besides the per-command 0/1/2.
inline constexpr int kUsage = 64;
inline constexpr int kDataError = 65;
inline constexpr int kNoInput = 66;
inline constexpr int kInternal = 70;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace haantjes::cli
