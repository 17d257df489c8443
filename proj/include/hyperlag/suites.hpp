#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyperlag {

/// Outcome of one seeded property suite.
struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0 && trials > 0; }
};

/// maclaurin, scaling, kk, kkt, compression, uncovered, symmetrize, gradient, swaps
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws ArgumentError for an unknown name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

}  // namespace hyperlag
