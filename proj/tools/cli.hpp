#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cwf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name.
/// Exit status: 0 success, 1 library error or failed verification, 2 bad usage or input syntax.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cwf::cli
