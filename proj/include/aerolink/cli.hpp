#ifndef AEROLINK_CLI_HPP
#define AEROLINK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace aerolink::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 1;
inline constexpr int exit_runtime = 2;

/// Subcommands: outage, sweep, validate, presets. Exit codes: 0 success,
/// 1 validation failure (bad arguments, bad config, failed validation run),
/// 2 runtime error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

}  // namespace aerolink::cli

#endif  // AEROLINK_CLI_HPP
