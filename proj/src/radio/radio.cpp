#include "locate/radio/radio.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace locate::radio {

RadioProfile RadioProfile::lora() { return RadioProfile{}; }

RadioProfile RadioProfile::wifi() {
  RadioProfile p;
  p.name = "wifi";
  p.range_m = 100.0;
  return p;
}

void RadioProfile::validate() const {
  if (!(range_m > 0.0)) throw std::invalid_argument("range_m must be > 0");
  if (!(airtime_s >= 0.0)) throw std::invalid_argument("airtime_s must be >= 0");
  if (!(beta > 0.0)) throw std::invalid_argument("pdr_beta must be > 0");
}

double pdr(double d, const RadioProfile& profile) {
  if (d > profile.range_m) {
    return 0.0;
  }
  switch (profile.pdr_model) {
    case PdrModel::kUnitDisk:
      return 1.0;
    case PdrModel::kSmooth:
      return std::max(0.0, 1.0 - std::pow(d / profile.range_m, profile.beta));
  }
  return 0.0;
}

std::vector<Reception> broadcast(world::NodeId tx, sim::SimTime t, const protocol::Message& msg,
                                 const world::World& world, const RadioProfile& profile,
                                 sim::RandomStream& stream) {
  std::vector<Reception> out;
  const world::Position origin = world.position(tx, t);
  for (const auto& node : world.nodes()) {
    if (node.id == tx) {
      continue;
    }
    const double d = world::distance(origin, world.position(node.id, t));
    const double p = pdr(d, profile);
    if (p <= 0.0) {
      continue;
    }
    if (p < 1.0 && !stream.bernoulli(p)) {
      continue;
    }
    out.push_back(Reception{node.id, t, t + profile.airtime_s, msg});
  }
  return out;
}

std::vector<Reception> resolve_collisions(std::vector<Reception> receptions) {
  std::vector<bool> dropped(receptions.size(), false);
  for (std::size_t i = 0; i < receptions.size(); ++i) {
    for (std::size_t j = i + 1; j < receptions.size(); ++j) {
      const auto& a = receptions[i];
      const auto& b = receptions[j];
      if (a.receiver == b.receiver && a.start <= b.end && b.start <= a.end) {
        dropped[i] = dropped[j] = true;
      }
    }
  }
  std::vector<Reception> survivors;
  for (std::size_t i = 0; i < receptions.size(); ++i) {
    if (!dropped[i]) survivors.push_back(std::move(receptions[i]));
  }
  return survivors;
}

}  // namespace locate::radio
