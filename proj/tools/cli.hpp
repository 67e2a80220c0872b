#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgsteg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 2;
inline constexpr int kExitNoPayload = 3;

/// Runs one invocation. `args` excludes the program name. Payload output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pgsteg::cli
