#pragma once

#include <string>
#include <vector>

#include "locate/protocol/message.hpp"
#include "locate/sim/random_stream.hpp"
#include "locate/sim/sim_time.hpp"
#include "locate/world/world.hpp"

namespace locate::radio {

enum class PdrModel { kUnitDisk, kSmooth };
enum class Interference { kNone, kCollision };

/// Parametric broadcast channel. Smooth PDR is 1 - (d/range)^beta inside range.
struct RadioProfile {
  std::string name = "lora";
  double range_m = 500.0;
  double airtime_s = 0.4;
  PdrModel pdr_model = PdrModel::kUnitDisk;
  double beta = 4.0;
  Interference interference = Interference::kNone;

  static RadioProfile lora();
  static RadioProfile wifi();

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct Reception {
  world::NodeId receiver = 0;
  sim::SimTime start = 0.0;
  sim::SimTime end = 0.0;
  protocol::Message message;
};

double pdr(double d, const RadioProfile& profile);

/**
 * Every node other than the transmitter that hears a transmission started
 * at `t`. Range membership is evaluated at `t`; a random draw is consumed
 * only for receivers whose PDR is strictly between 0 and 1. Receivers are
 * listed in node-id order.
 */
std::vector<Reception> broadcast(world::NodeId tx, sim::SimTime t, const protocol::Message& msg,
                                 const world::World& world, const RadioProfile& profile,
                                 sim::RandomStream& stream);

/// Drops every reception that overlaps another one at the same receiver.
std::vector<Reception> resolve_collisions(std::vector<Reception> receptions);

}  // namespace locate::radio
