#pragma once

#include <ostream>

namespace profin::cli {

/// Parses arguments, runs one subcommand and writes the report to `out`
/// (or the --out file). Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace profin::cli
