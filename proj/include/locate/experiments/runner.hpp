#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "locate/experiments/scenario.hpp"
#include "locate/protocol/message.hpp"
#include "locate/protocol/state.hpp"
#include "locate/sim/random_stream.hpp"
#include "locate/world/world.hpp"

namespace locate::experiments {

/// Optional tap on a run, used by tests and diagnostics. Default no-ops.
class RunObserver {
 public:
  virtual ~RunObserver() = default;
  virtual void on_event(sim::SimTime /*t*/) {}
  virtual void on_transmit(sim::SimTime /*t*/, world::NodeId /*node*/,
                           const protocol::Message& /*msg*/) {}
  virtual void on_delivery(sim::SimTime /*t*/, world::NodeId /*node*/,
                           const protocol::Message& /*msg*/) {}
  virtual void on_aware(sim::SimTime /*t*/, world::NodeId /*node*/) {}
  virtual void on_phase(sim::SimTime /*t*/, world::NodeId /*node*/, protocol::Phase /*from*/,
                        protocol::Phase /*to*/) {}
};

/**
 * Runs one emergency to completion on an already built world.
 *
 * The source (node 0) starts the emergency at t = 0. The run ends when every
 * node that heard an E-REQ (the source included) is solved, when the queue
 * drains, or when the next event lies beyond the horizon.
 */
RunResult simulate(const ScenarioConfig& config, world::World world, sim::RandomStream& stream,
                   RunObserver* observer = nullptr);

/// Builds a random world with seed base_seed ^ run_index and simulates it.
RunResult run_once(const ScenarioConfig& config, std::size_t run_index,
                   RunObserver* observer = nullptr);

/// Err/ERT/EO statistics. CI95 = 1.96 * sample stddev / sqrt(count); absent below 2 samples.
Aggregate aggregate(std::span<const RunResult> results, double e_thr);

/// Worker count to use: `requested`, or hardware concurrency when 0.
unsigned resolve_workers(unsigned requested);

/// All `config.runs` runs, ordered by run index regardless of worker count.
std::pair<std::vector<RunResult>, Aggregate> run_batch(const ScenarioConfig& config,
                                                       unsigned workers = 0);

enum class SweepAxis { kTau, kN, kPStart };

const char* to_string(SweepAxis axis);

struct SweepRow {
  protocol::Variant protocol;
  std::size_t n;
  double tau;
  double p_start;
  Aggregate aggregate;
};

/// One row per (axis value, protocol), value-major. Every point reuses base_seed.
std::vector<SweepRow> sweep(const ScenarioConfig& base, SweepAxis axis,
                            std::span<const double> values,
                            std::span<const protocol::Variant> protocols, unsigned workers = 0);

}  // namespace locate::experiments
