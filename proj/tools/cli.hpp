#pragma once

#include <ostream>

namespace hyperlag::cli {

/// Exit codes of the command-line front end.
enum Exit : int {
  ok = 0,
  counterexample = 1,
  usage = 2,
  uncertified = 3,
  saturated = 4,
};

/// Runs the CLI with argv-style arguments, writing to `out` / `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperlag::cli
