#pragma once

#include <string>
#include <vector>

#include "trispec/eigenlab.hpp"

namespace trispec {

struct SuiteOptions {
  long long max = 0;  // 0: use the suite's default sweep bound
  unsigned long long seed = kDefaultEigenlabSeed;
};

struct SuiteResult {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  std::string summary;  // one informational line (bounds, extremes)
  std::vector<std::string> failure_notes;

  bool passed() const { return failures == 0; }
};

// charsum, lattice, eisenstein, relations, weyl, eigenlab.
const std::vector<std::string>& suite_names();

// Runs one suite; unknown names throw std::invalid_argument.  Results are
// deterministic for a fixed seed and independent of thread count.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace trispec
