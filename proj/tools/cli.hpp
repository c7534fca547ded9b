#pragma once

#include <ostream>

namespace eitcool::cli {

// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

// Entry point of the `eitcool` command-line tool. Subcommands: steady,
// spectrum, cool, evolve, sweep, gridsearch, figure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eitcool::cli
