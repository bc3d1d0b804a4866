#pragma once

namespace aperiodic::cli {

// Parses argv and executes one subcommand. Returns the process exit status:
// 0 success, 2 validation failure (bad values, parameters outside P),
// 1 internal error, 64 unknown flags / malformed command line.
int run(int argc, const char* const* argv);

}  // namespace aperiodic::cli
