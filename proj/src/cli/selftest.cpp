#include "locate/cli/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "locate/protocol/contention.hpp"

namespace locate::cli {

namespace {

double rel_error(double expected, double actual) {
  const double scale = std::max(std::fabs(expected), 1e-300);
  return expected == actual ? 0.0 : std::fabs(actual - expected) / scale;
}

void check(SelftestReport& report, std::string name, double expected, double actual) {
  const double err = rel_error(expected, actual);
  report.checks.push_back({std::move(name), expected, actual, err, err <= kSelftestTolerance});
}

}  // namespace

bool SelftestReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

SelftestReport selftest() {
  using namespace protocol;
  const ProtocolParams p;  // cw_max 20 s, gamma 0.005 1/m, r 500 m
  SelftestReport report;

  // Reference values evaluated independently at 30 significant digits.
  check(report, "delta(500)", 1.25, delta(500.0, p.gamma, p.r));
  check(report, "delta(1000)", 1.66666666666666666666666666667, delta(1000.0, p.gamma, p.r));
  check(report, "CW_acc(0)", 0.0, acceptance_window(0.0, p));
  check(report, "CW_acc(500)", 14.2699040627961979935022914670, acceptance_window(500.0, p));
  check(report, "CW_acc(1000)", 16.2224879432487632307888740974, acceptance_window(1000.0, p));
  check(report, "CW_ft(0)", 20.0, forwarding_window(0.0, p));
  check(report, "CW_ft(500)", 5.73009593720380200649770853296, forwarding_window(500.0, p));
  check(report, "CW_ft(1000)", 3.77751205675123676921112590256, forwarding_window(1000.0, p));
  check(report, "P_DTN(0.4,0)", 0.4, dtn_probability(0.4, 0));
  check(report, "P_DTN(0.4,1)", 0.632455532033675866399778708887, dtn_probability(0.4, 1));
  check(report, "P_DTN(0.4,2)", 0.736806299728077321155964566716, dtn_probability(0.4, 2));
  check(report, "P_DTN(1.0,7)", 1.0, dtn_probability(1.0, 7));

  // Complement identity: 0, the decades 1..1e4, and 994 evenly spaced points.
  std::vector<double> ds = {0.0, 1.0, 10.0, 100.0, 1000.0, 10000.0};
  for (int k = 1; ds.size() < 1000; ++k) ds.push_back(10000.0 * k / 995.0);
  double worst = 0.0;
  double worst_d = 0.0;
  for (double d : ds) {
    const double sum = acceptance_window(d, p) + forwarding_window(d, p);
    const double err = rel_error(p.cw_max, sum);
    if (err > worst) {
      worst = err;
      worst_d = d;
    }
  }
  char name[96];
  std::snprintf(name, sizeof name, "CW_acc+CW_ft=CW_max over %zu d (worst d=%g)", ds.size(),
                worst_d);
  report.checks.push_back({name, p.cw_max, p.cw_max * (1.0 + worst), worst,
                           worst <= kSelftestTolerance});
  return report;
}

void print_report(std::ostream& out, const SelftestReport& report) {
  for (const auto& c : report.checks) {
    char line[256];
    std::snprintf(line, sizeof line, "%s  %-48s expected %.15g got %.15g (rel %.2e)\n",
                  c.passed ? "PASS" : "FAIL", c.name.c_str(), c.expected, c.actual,
                  c.rel_error);
    out << line;
  }
  out << (report.passed() ? "selftest: all checks passed\n" : "selftest: FAILED\n");
}

}  // namespace locate::cli
