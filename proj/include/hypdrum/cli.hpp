#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypdrum {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitNotConverged = 3;

/// Runs the command line `args` (program name excluded). Results go to `out`
/// (or to --out PATH), diagnostics to `err`.
///
/// Subcommands: volume, prism, scan, maximize, classify, threshold, limit,
/// table. Exit codes: 0 on success, 2 on invalid arguments or domain
/// errors, 3 when an optimization or threshold search does not converge.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypdrum
