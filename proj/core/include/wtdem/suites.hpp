#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wtdem/titscone.hpp"

// Randomized verification suites behind `wtdem verify` and the acceptance
// harness.  Deterministic under a fixed seed; each suite reports the number
// of individual checks, the number of violations, and the first
// counterexample in printable form.

namespace wtdem {

struct SuiteOptions {
  std::uint64_t seed = 1;
  int count = 0;  // 0: per-suite default
  std::int64_t max_k = 6;
  std::int64_t max_m = 6;
  std::int64_t max_l = 5;
};

struct SuiteReport {
  std::string name;
  long long checks = 0;
  long long violations = 0;
  std::string first_failure;
  std::vector<std::string> notes;

  bool passed() const { return violations == 0; }
};

SuiteReport suite_qbg(const SuiteOptions& opts);
SuiteReport suite_lp(const SuiteOptions& opts);
SuiteReport suite_length(const SuiteOptions& opts);
SuiteReport suite_demazure(const SuiteOptions& opts);
SuiteReport suite_assoc(const SuiteOptions& opts);

std::vector<SuiteReport> suite_all(const SuiteOptions& opts);

}  // namespace wtdem
