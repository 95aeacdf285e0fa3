#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace locate::cli {

struct SelftestCheck {
  std::string name;
  double expected;
  double actual;
  double rel_error;
  bool passed;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;
  bool passed() const;
};

inline constexpr double kSelftestTolerance = 1e-9;

/// Contention and DTN formulas against hand-derived values, plus the window
/// complement identity at 1000 distances. All at the default parameters.
SelftestReport selftest();

void print_report(std::ostream& out, const SelftestReport& report);

}  // namespace locate::cli
