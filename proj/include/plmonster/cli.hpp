#pragma once

// Command-line front end. All maps compose left to right: `compose A B`
// applies A first, then B.

#include <ostream>
#include <string>
#include <vector>

namespace plm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Errors go to err as one JSON line
// {"error": kind, "message": text}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plm::cli
