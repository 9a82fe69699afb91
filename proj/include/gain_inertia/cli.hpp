#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gain_inertia {

/// Exit codes shared by all subcommands.
enum ExitCode : int {
    kExitOk = 0,
    kExitViolation = 1, // a checked statement failed (fuzz, enumerate, analyze --strict)
    kExitUsage = 2,     // bad arguments or unparsable graph file
    kExitIo = 3,
    kExitRetryExhausted = 4,
};

/// Runs the command line `args` (args[0] is the program name). JSON goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count from GAIN_INERTIA_THREADS, else hardware concurrency (min 1).
unsigned worker_count();

} // namespace gain_inertia
