#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace baric::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name.
/// Returns 0 on success, 1 on a failed check or a counterexample, 2 on a
/// usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace baric::cli
