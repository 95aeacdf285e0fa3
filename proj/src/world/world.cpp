#include "locate/world/world.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace locate::world {

const char* to_string(Role role) {
  switch (role) {
    case Role::kSource:
      return "source";
    case Role::kSolver:
      return "solver";
    case Role::kRelay:
      return "relay";
  }
  return "?";
}

std::size_t solver_count(std::size_t n, double tau) {
  // The epsilon absorbs products such as 0.15 * 10 = 1.4999999999999998.
  return static_cast<std::size_t>(std::floor(tau * static_cast<double>(n) + 0.5 + 1e-9));
}

World::World(Arena arena, std::vector<NodeRecord> nodes)
    : arena_(arena), nodes_(std::move(nodes)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].id != i) {
      throw std::invalid_argument("World: node ids must be dense and ordered");
    }
  }
}

Position World::position(NodeId id, sim::SimTime t) const {
  return position_on(nodes_.at(id).leg, arena_, t);
}

const MobilityLeg& World::next_leg(NodeId id, sim::SimTime t, sim::RandomStream& stream) {
  NodeRecord& rec = nodes_.at(id);
  if (rec.stationary()) {
    throw std::logic_error("World::next_leg: node is stationary");
  }
  rec.leg = start_leg(rec.leg.destination, t, arena_, stream);
  return rec.leg;
}

World init_world(std::size_t n, double tau, double side, sim::RandomStream& stream) {
  if (tau < 0.0 || tau > 1.0) {
    throw std::invalid_argument("init_world: tau outside [0, 1]");
  }
  const Arena arena{side};
  std::vector<NodeRecord> nodes(n + 1);
  nodes[0] = NodeRecord{0, Role::kSource, stationary_leg(arena.center())};

  std::vector<Position> placement(n);
  for (auto& p : placement) {
    p.x = stream.uniform(0.0, side);
    p.y = stream.uniform(0.0, side);
  }

  // Partial Fisher-Yates over mobile ids picks the solver subset.
  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), NodeId{1});
  const std::size_t solvers = solver_count(n, tau);
  for (std::size_t i = 0; i < solvers; ++i) {
    const std::size_t j = i + stream.index(n - i);
    std::swap(ids[i], ids[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i + 1].id = static_cast<NodeId>(i + 1);
    nodes[i + 1].role = Role::kRelay;
  }
  for (std::size_t i = 0; i < solvers; ++i) {
    nodes[ids[i]].role = Role::kSolver;
  }
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i + 1].leg = start_leg(placement[i], 0.0, arena, stream);
  }
  return World(arena, std::move(nodes));
}

}  // namespace locate::world
