#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wfs {

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one wfsenum subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wfs
