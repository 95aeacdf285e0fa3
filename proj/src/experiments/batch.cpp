#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "locate/experiments/runner.hpp"

namespace locate::experiments {

namespace {

struct Moments {
  double mean = 0.0;
  std::optional<double> ci95;
};

Moments moments(const std::vector<double>& xs) {
  Moments m;
  double sum = 0.0;
  for (double x : xs) sum += x;
  m.mean = sum / static_cast<double>(xs.size());
  if (xs.size() >= 2) {
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    const double var = ss / static_cast<double>(xs.size() - 1);
    m.ci95 = 1.96 * std::sqrt(var / static_cast<double>(xs.size()));
  }
  return m;
}

}  // namespace

Aggregate aggregate(std::span<const RunResult> results, double e_thr) {
  if (results.empty()) {
    throw std::invalid_argument("aggregate: no results");
  }
  Aggregate agg;
  agg.runs_total = results.size();
  std::vector<double> erts;
  std::vector<double> eos;
  std::size_t within = 0;
  for (const auto& r : results) {
    eos.push_back(static_cast<double>(r.ereq_count));
    if (r.solved && r.ert_s) {
      erts.push_back(*r.ert_s);
      if (*r.ert_s <= e_thr) ++within;
    }
  }
  agg.runs_solved = erts.size();
  agg.err_pct = static_cast<double>(within) / static_cast<double>(results.size());
  if (!erts.empty()) {
    const Moments m = moments(erts);
    agg.ert_mean_s = m.mean;
    agg.ert_ci95_s = m.ci95;
  }
  const Moments m = moments(eos);
  agg.eo_mean = m.mean;
  agg.eo_ci95 = m.ci95;
  return agg;
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

std::pair<std::vector<RunResult>, Aggregate> run_batch(const ScenarioConfig& config,
                                                       unsigned workers) {
  config.validate();
  std::vector<RunResult> results(config.runs);
  const unsigned pool = std::min<unsigned>(resolve_workers(workers),
                                           static_cast<unsigned>(config.runs));
  if (pool <= 1) {
    for (std::size_t i = 0; i < config.runs; ++i) results[i] = run_once(config, i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> threads;
    // Each slot is written by exactly one worker; joins publish the results.
    for (unsigned w = 0; w < pool; ++w) {
      threads.emplace_back([&] {
        for (std::size_t i = next++; i < config.runs; i = next++) {
          results[i] = run_once(config, i);
        }
      });
    }
  }
  Aggregate agg = aggregate(results, config.params.e_thr);
  return {std::move(results), agg};
}

const char* to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kTau:
      return "tau";
    case SweepAxis::kN:
      return "n";
    case SweepAxis::kPStart:
      return "p_start";
  }
  return "?";
}

std::vector<SweepRow> sweep(const ScenarioConfig& base, SweepAxis axis,
                            std::span<const double> values,
                            std::span<const protocol::Variant> protocols, unsigned workers) {
  std::vector<SweepRow> rows;
  for (double v : values) {
    ScenarioConfig point = base;
    switch (axis) {
      case SweepAxis::kTau:
        point.tau = v;
        break;
      case SweepAxis::kN:
        if (v < 0.0 || v != std::floor(v)) {
          throw std::invalid_argument("sweep: n values must be non-negative integers");
        }
        point.n = static_cast<std::size_t>(v);
        break;
      case SweepAxis::kPStart:
        point.params.p_start = v;
        break;
    }
    for (protocol::Variant p : protocols) {
      point.protocol = p;
      auto [results, agg] = run_batch(point, workers);
      rows.push_back(SweepRow{p, point.n, point.tau, point.params.p_start, agg});
    }
  }
  return rows;
}

}  // namespace locate::experiments
