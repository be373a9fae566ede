#pragma once

#include <iosfwd>

namespace kuranet {

/// Command-line front end. Subcommands: simulate, sweep, kc, plot.
/// Returns the process exit code:
///   0 success
///   2 invalid arguments, config, or input files
///   3 rejection sampling exhausted
///   4 numerical blowup
///   5 incomplete sweep
///   6 no transition window for the critical-coupling estimate
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kuranet
