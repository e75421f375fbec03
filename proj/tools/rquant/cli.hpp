#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rquant::cli {

// Exit statuses are part of the interface.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;    // bad arguments, unreadable or malformed input
inline constexpr int kFailed = 2;   // an identity does not hold, or quantization is obstructed

/// Runs one command. `args` excludes the program name. `in` is read only
/// when an input argument is "-".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace rquant::cli
