#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qkey::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics to `err`. Returns 0 on success or a passing check, 1
/// for a failing check, 2 for usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "1,0,2" (optionally "[1,0,2]"); throws InvalidArgument.
std::vector<int> parse_vector(const std::string& s, bool allow_negative);

}  // namespace qkey::cli
