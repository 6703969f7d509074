#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isotree::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerdictFalse = 1;
inline constexpr int kIoError = 2;
inline constexpr int kPrecondition = 3;

/// Runs the command line; `args[0]` is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isotree::cli
