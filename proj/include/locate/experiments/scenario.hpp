#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "locate/protocol/behavior.hpp"
#include "locate/protocol/params.hpp"
#include "locate/radio/radio.hpp"
#include "locate/sim/sim_time.hpp"

namespace locate::experiments {

struct ScenarioConfig {
  double side_m = 5000.0;
  std::size_t n = 40;
  double tau = 0.15;
  protocol::Variant protocol = protocol::Variant::kLocate;
  radio::RadioProfile radio = radio::RadioProfile::lora();
  protocol::ProtocolParams params;
  std::size_t runs = 1000;
  // Run i uses seed base_seed ^ i.
  std::uint64_t base_seed = 1;
  double horizon_s = sim::kDefaultHorizon;

  /// Throws std::invalid_argument naming the offending key.
  void validate() const;
};

struct RunResult {
  std::size_t run_index = 0;
  std::uint64_t seed = 0;
  bool solved = false;
  std::optional<double> ert_s;
  std::uint64_t ereq_count = 0;
  std::uint64_t erep_count = 0;
  double end_time_s = 0.0;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

struct Aggregate {
  double err_pct = 0.0;  // fraction of runs solved within e_thr, in [0, 1]
  std::optional<double> ert_mean_s;
  std::optional<double> ert_ci95_s;
  double eo_mean = 0.0;
  std::optional<double> eo_ci95;
  std::size_t runs_total = 0;
  std::size_t runs_solved = 0;

  friend bool operator==(const Aggregate&, const Aggregate&) = default;
};

}  // namespace locate::experiments
