#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tribrac::cli {

// Exit statuses
inline constexpr int ok = 0;
inline constexpr int mismatch = 1;
inline constexpr int usage = 2;
inline constexpr int cap = 3;

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tribrac::cli
