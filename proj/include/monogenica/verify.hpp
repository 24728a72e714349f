#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace monogenica {

struct VerifyOptions {
  int n_max = 6;
  std::uint64_t seed = 1;
  bool deep = false;  // triple-path agreement up to degree max(n_max, 12)
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

/// Runs the invariant suite. Deterministic for fixed options.
VerifyReport run_verification(const VerifyOptions& options);

std::string to_json(const VerifyReport& report, int indent = 2);

}  // namespace monogenica
