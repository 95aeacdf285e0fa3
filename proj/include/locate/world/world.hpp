#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "locate/sim/random_stream.hpp"
#include "locate/sim/sim_time.hpp"
#include "locate/world/geometry.hpp"
#include "locate/world/mobility.hpp"

namespace locate::world {

using NodeId = std::uint32_t;

enum class Role : std::uint8_t { kSource, kSolver, kRelay };

const char* to_string(Role role);

struct NodeRecord {
  NodeId id = 0;
  Role role = Role::kRelay;
  MobilityLeg leg;

  bool stationary() const { return leg.stationary(); }
};

/// Number of solvers among n mobile nodes: round(tau * n), halves rounded up.
std::size_t solver_count(std::size_t n, double tau);

/**
 * Node population and their mobility over time.
 *
 * Node 0 is always the emergency source, stationary at the arena center.
 */
class World {
 public:
  World(Arena arena, std::vector<NodeRecord> nodes);

  const Arena& arena() const { return arena_; }
  std::size_t size() const { return nodes_.size(); }
  const NodeRecord& node(NodeId id) const { return nodes_.at(id); }
  const std::vector<NodeRecord>& nodes() const { return nodes_; }

  Position position(NodeId id, sim::SimTime t) const;

  /// Replaces the finished leg of `id` with a fresh one starting at its endpoint.
  const MobilityLeg& next_leg(NodeId id, sim::SimTime t, sim::RandomStream& stream);

 private:
  Arena arena_;
  std::vector<NodeRecord> nodes_;
};

/// n mobile nodes placed i.i.d. uniformly plus the source at the center.
World init_world(std::size_t n, double tau, double side, sim::RandomStream& stream);

}  // namespace locate::world
