#pragma once

#include <iosfwd>
#include <stdexcept>

#include "cli/config.hpp"

namespace rll::cli {

/// Bad flags or values; mapped to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int cmd_enumerate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_measure(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_lambda(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sample(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_dims(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_gamma(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.subcommand and maps exceptions to exit codes.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace rll::cli
