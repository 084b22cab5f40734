#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace richwords::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_rejected = 1;
inline constexpr int exit_usage = 2;

/// Runs one invocation; `args` excludes the program name. Results go to `out`, all
/// diagnostics to `err`. Returns 0 on success, 1 on a domain rejection, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace richwords::cli
