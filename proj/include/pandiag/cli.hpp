#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pandiag::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // well-formed input, check or verification failed
inline constexpr int kUsage = 2;     // bad flags, malformed document, unsupported shape

// Runs one subcommand. `args` excludes the program name. Files named "-" are
// read from `in` or written to `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pandiag::cli
