#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rll {

struct VerifyOptions {
  bool quick = false;
  unsigned workers = 1;
  /// Re-run criteria 1-14 with a different worker count and compare reports.
  bool check_determinism = true;
  std::uint64_t seed = 20190611;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;  // wall time; never part of the report text
};

struct VerifyReport {
  std::vector<CriterionResult> criteria;

  bool all_passed() const;
  /// One line per criterion plus a summary; deterministic given the options
  /// (excluding worker count).
  std::string text(bool quick) const;
};

/// Runs the acceptance criteria (1-15).
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace rll
