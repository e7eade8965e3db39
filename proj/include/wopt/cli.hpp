#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wopt::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitYes = 0;   // weakly optimal / valid / certified
inline constexpr int kExitNo = 1;    // not weakly optimal (or not weakly feasible) / invalid / inconclusive
inline constexpr int kExitInput = 2; // unreadable or malformed input

// Runs `wopt <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wopt::cli
