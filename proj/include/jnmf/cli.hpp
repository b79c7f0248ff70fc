#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jnmf::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kValidation = 1,
  kIo = 2,
  kNumerical = 3,
};

/// Entry point of the `jnmfdist` tool. `args[0]` is the program name.
///
/// Any subcommand accepts `--config FILE`. The file is either flat
/// `key = value` lines (keys are long option names without dashes) or a
/// JSON sidecar written by a previous run, whose "config" object is used.
/// Values given on the command line override the file, which overrides
/// built-in defaults.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jnmf::cli
