#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyiso::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitInput = 2;

/// Runs one invocation of the polyiso command line. `in`/`out` stand in for
/// the standard streams when a subcommand reads or writes "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace polyiso::cli
