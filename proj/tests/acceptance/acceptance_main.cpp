// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "locate/cli/csv.hpp"
#include "locate/cli/selftest.hpp"
#include "locate/experiments/runner.hpp"
#include "locate/protocol/contention.hpp"
#include "locate/sim/random_stream.hpp"
#include "support/invariants.hpp"

namespace {

using namespace locate;
using experiments::Aggregate;
using experiments::ScenarioConfig;
using experiments::SweepRow;
using protocol::Variant;

constexpr std::size_t kRuns = 200;
constexpr std::uint64_t kSeed = 1;

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("%s  criterion %d  %-28s %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

ScenarioConfig base(Variant v, std::size_t n = 40, double tau = 0.15) {
  ScenarioConfig c;
  c.protocol = v;
  c.n = n;
  c.tau = tau;
  c.runs = kRuns;
  c.base_seed = kSeed;
  return c;
}

Aggregate run(const ScenarioConfig& c) { return experiments::run_batch(c, 0).second; }

double ert(const Aggregate& a) { return a.ert_mean_s.value_or(INFINITY); }
double ci(const Aggregate& a) { return a.ert_ci95_s.value_or(INFINITY); }

void formulas() {
  const auto rep = cli::selftest();
  const protocol::ProtocolParams p;
  auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
  const double worst = std::max({rel(protocol::delta(500, p.gamma, p.r), 1.25),
                                 rel(protocol::acceptance_window(500, p), 14.269904062796198),
                                 rel(protocol::forwarding_window(500, p), 5.730095937203802),
                                 rel(protocol::dtn_probability(0.4, 1), 0.6324555320336759)});
  report(1, "formula exactness", rep.passed() && worst <= 1e-9,
         std::to_string(rep.checks.size()) + " selftest checks, worst anchor rel err " +
             fmt("%.2e", worst));
}

const Aggregate& find(const std::vector<SweepRow>& rows, Variant v, double tau) {
  for (const auto& r : rows) {
    if (r.protocol == v && std::abs(r.tau - tau) < 1e-12) return r.aggregate;
  }
  throw std::logic_error("missing sweep row");
}

void tau_sweep_criteria() {
  const std::vector<double> taus{0.05, 0.10, 0.15, 0.20, 0.25, 0.30};
  const std::vector<Variant> protos{Variant::kLocate, Variant::kFlooding, Variant::kProbabilistic};
  const auto rows = experiments::sweep(base(Variant::kLocate), experiments::SweepAxis::kTau, taus,
                                       protos, 0);
  bool ok = true;
  std::ostringstream detail;
  for (double tau : taus) {
    const auto& l = find(rows, Variant::kLocate, tau);
    const auto& f = find(rows, Variant::kFlooding, tau);
    const auto& q = find(rows, Variant::kProbabilistic, tau);
    bool point = ert(l) < ert(f) && ert(l) < ert(q);
    if (tau <= 0.15 + 1e-12) {
      point = point && ert(l) + ci(l) < ert(f) - ci(f) && ert(l) + ci(l) < ert(q) - ci(q);
    }
    ok = ok && point;
    detail << fmt("tau=%.2f ", tau) << fmt("L=%.0f", ert(l)) << fmt("/F=%.0f", ert(f))
           << fmt("/P=%.0f", ert(q)) << (point ? "" : "(x)") << ' ';
  }
  report(2, "tau-sweep ERT ordering", ok, detail.str());

  const auto& l30 = find(rows, Variant::kLocate, 0.30);
  report(3, "ERR ceiling", l30.err_pct >= 0.90,
         fmt("ERR(tau=0.30)=%.3f, need >= 0.90", l30.err_pct));

  const auto full = find(rows, Variant::kLocate, 0.15);
  const auto flood = find(rows, Variant::kFlooding, 0.15);
  const auto basic = run(base(Variant::kLocateBasic));
  const double basic_ratio = basic.eo_mean / full.eo_mean;
  const double flood_ratio = full.eo_mean / flood.eo_mean;
  report(4, "overhead ordering", basic_ratio >= 1.20 && flood_ratio <= 3.0,
         fmt("EO basic/full=%.3f (>= 1.20)", basic_ratio) +
             fmt(", full/flooding=%.3f (<= 3)", flood_ratio));
}

void sparse_gain() {
  const auto l = run(base(Variant::kLocate, 5));
  const auto f = run(base(Variant::kFlooding, 5));
  const double ratio = ert(l) / ert(f);
  report(5, "sparse-network gain", ratio <= 0.60,
         fmt("ERT locate=%.0f", ert(l)) + fmt(" flooding=%.0f", ert(f)) +
             fmt(" ratio=%.3f, need <= 0.60", ratio));
}

void radio_ordering() {
  const auto lora = run(base(Variant::kLocate));
  auto wc = base(Variant::kLocate);
  wc.radio = radio::RadioProfile::wifi();
  const auto wifi = run(wc);
  report(6, "radio ordering", ert(wifi) > ert(lora) && wifi.err_pct < lora.err_pct,
         fmt("ERT wifi=%.0f", ert(wifi)) + fmt(" lora=%.0f", ert(lora)) +
             fmt(", ERR wifi=%.3f", wifi.err_pct) + fmt(" lora=%.3f", lora.err_pct));
}

void p_start_insensitivity() {
  const auto lo = run(base(Variant::kLocate));
  auto hc = base(Variant::kLocate);
  hc.params.p_start = 0.8;
  const auto hi = run(hc);
  const double drift = std::abs(ert(hi) - ert(lo)) / ert(lo);
  report(7, "p_start insensitivity", drift <= 0.15 && hi.eo_mean > lo.eo_mean,
         fmt("ERT drift=%.3f (<= 0.15)", drift) + fmt(", EO 0.8=%.1f", hi.eo_mean) +
             fmt(" > 0.4=%.1f", lo.eo_mean));
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// Writes the per-run and aggregate CSV files for `c` under `stem` and returns their bytes.
std::string csv_files(const ScenarioConfig& c, unsigned workers, const std::filesystem::path& stem) {
  const auto [results, agg] = experiments::run_batch(c, workers);
  const SweepRow row{c.protocol, c.n, c.tau, c.params.p_start, agg};
  const std::filesystem::path runs = stem.string() + "_runs.csv";
  const std::filesystem::path aggregate = stem.string() + "_aggregate.csv";
  cli::write_runs_csv(runs, c, results);
  cli::write_aggregate_csv(aggregate, std::span<const SweepRow>(&row, 1));
  return slurp(runs) + slurp(aggregate);
}

void determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "locate_acceptance";
  std::filesystem::create_directories(dir);
  bool ok = true;
  std::size_t bytes = 0;
  for (auto v : {Variant::kLocate, Variant::kProbabilistic}) {
    auto c = base(v);
    c.radio.pdr_model = radio::PdrModel::kSmooth;
    const std::string a = csv_files(c, 1, dir / "first");
    const std::string b = csv_files(c, 0, dir / "second");
    ok = ok && !a.empty() && a == b;
    bytes += a.size();
  }
  std::filesystem::remove_all(dir);
  report(8, "determinism", ok, std::to_string(bytes) + " CSV bytes identical across reruns");
}

void properties() {
  std::vector<std::string> bad;
  const protocol::ProtocolParams p;
  double prev = -1.0;
  for (int i = 0; i <= 1000; ++i) {
    const double d = 5.0 * i;
    const double acc = protocol::acceptance_window(d, p);
    if (std::abs(acc + protocol::forwarding_window(d, p) - p.cw_max) > 1e-9) {
      bad.push_back("window complement");
    }
    if (acc < prev) bad.push_back("window monotonicity");
    prev = acc;
  }

  std::size_t runs = 0;
  for (auto v : {Variant::kLocate, Variant::kLocateBasic, Variant::kFlooding,
                 Variant::kProbabilistic}) {
    auto c = base(v);
    const bool absorbing = v == Variant::kLocate || v == Variant::kLocateBasic;
    for (std::size_t i = 0; i < 25; ++i, ++runs) {
      testing::InvariantObserver obs(c.n + 1, c.side_m, c.params.ttl_init, absorbing);
      const auto r = experiments::run_once(c, i, &obs);
      for (const auto& s : testing::check_run(obs, r, c, c.n + 1)) bad.push_back(s);
    }
  }

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto c = base(Variant::kLocate, 2);
    sim::RandomStream s(seed);
    testing::InvariantObserver obs(3, 5000.0, c.params.ttl_init, true);
    const auto r = experiments::simulate(c, testing::line_world(), s, &obs);
    std::vector<protocol::Phase> relay;
    for (const auto& [node, phase] : obs.trace) {
      if (node == 1) relay.push_back(phase);
    }
    const std::vector<protocol::Phase> expected{protocol::Phase::kAccepting,
                                                protocol::Phase::kForwarding,
                                                protocol::Phase::kDtnActive,
                                                protocol::Phase::kSolved};
    if (!r.solved || relay != expected) bad.push_back("line topology phase trace");
  }
  report(9, "property suites", bad.empty(),
         bad.empty() ? std::to_string(runs) + " runs + line trace, no violations"
                     : std::to_string(bad.size()) + " violations, first: " + bad.front());
}

}  // namespace

int main() {
  std::printf("acceptance: %zu runs per point, base seed %llu\n", kRuns,
              static_cast<unsigned long long>(kSeed));
  formulas();
  tau_sweep_criteria();
  sparse_gain();
  radio_ordering();
  p_start_insensitivity();
  determinism();
  properties();
  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
