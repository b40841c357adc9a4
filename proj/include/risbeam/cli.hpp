#ifndef RISBEAM_CLI_HPP
#define RISBEAM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace risbeam::cli {

/// Exit codes: 0 success, 1 usage or configuration error, 2 numeric failure
/// (NaN or Inf detected while writing an output).
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumeric = 2;

/// Parses and runs one invocation (args exclude the program name).
/// Subcommands: map, sweep-error, sweep-xi, complexity, frame, oracle.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace risbeam::cli

#endif
