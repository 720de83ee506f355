#pragma once

#include <string>
#include <vector>

#include "delegsim/experiment.hpp"

namespace delegsim {

// Applies a flat key=value config file onto cfg. '#' starts a comment; blank
// lines ignored; keys match the CLI flag names (algo, runs, trials, neighbors,
// depth, seed, epsilon-lo, epsilon-hi, delta-lo, delta-hi, welch-window,
// welch-tol, out, decouple-env, threads). Unknown keys and malformed values
// throw std::invalid_argument naming the offender.
void apply_config_file(ExperimentConfig& cfg, const std::string& path);

// Parsed CLI invocation: action to take plus the assembled config. On error,
// `error` is a non-empty actionable message and exit_code is nonzero.
struct CliResult {
  enum class Action { Run, Validate, Oracle, Help, Error };
  Action action = Action::Error;
  ExperimentConfig cfg;
  std::string error;
  std::string help_text;
  int exit_code = 0;
};

// Parses argv (without the program name). Subcommands: run, validate, oracle.
// For `run`, flags override config-file values; --out (or out= in the file)
// is required.
CliResult parse_cli(const std::vector<std::string>& args);

}  // namespace delegsim
