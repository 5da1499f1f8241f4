#pragma once

#include <CLI11.hpp>

#include "cli_common.hpp"

namespace trajlab::cli {

// Each register_* attaches one subcommand to the app; the callback performs
// the work so main() just parses and returns the mapped exit code.
void register_synth(CLI::App& app, GlobalOptions& global, int& exit_code);
void register_encode(CLI::App& app, GlobalOptions& global, int& exit_code);
void register_repsim(CLI::App& app, GlobalOptions& global, int& exit_code);
void register_ltc(CLI::App& app, GlobalOptions& global, int& exit_code);
void register_report(CLI::App& app, GlobalOptions& global, int& exit_code);

}  // namespace trajlab::cli
