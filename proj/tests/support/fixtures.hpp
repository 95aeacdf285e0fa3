#pragma once

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "locate/protocol/state.hpp"
#include "locate/world/world.hpp"

namespace locate::testing {

/// Static world: node 0 is the source at `source`, then one node per entry.
inline world::World static_world(world::Position source,
                                 const std::vector<std::pair<world::Role, world::Position>>& others,
                                 double side = 5000.0) {
  std::vector<world::NodeRecord> nodes;
  nodes.push_back({0, world::Role::kSource, world::stationary_leg(source)});
  world::NodeId id = 1;
  for (const auto& [role, pos] : others) {
    nodes.push_back({id++, role, world::stationary_leg(pos)});
  }
  return world::World(world::Arena{side}, std::move(nodes));
}

template <typename T>
std::vector<T> actions_of(const protocol::Actions& actions) {
  std::vector<T> out;
  for (const auto& a : actions) {
    if (const auto* p = std::get_if<T>(&a)) out.push_back(*p);
  }
  return out;
}

template <typename T>
std::size_t count_of(const protocol::Actions& actions) {
  return actions_of<T>(actions).size();
}

inline std::vector<protocol::SetTimer> timers_set(const protocol::Actions& actions,
                                                  protocol::TimerSlot slot) {
  std::vector<protocol::SetTimer> out;
  for (const auto& t : actions_of<protocol::SetTimer>(actions)) {
    if (t.slot == slot) out.push_back(t);
  }
  return out;
}

inline bool cancels(const protocol::Actions& actions, protocol::TimerSlot slot) {
  const auto c = actions_of<protocol::CancelTimer>(actions);
  return std::any_of(c.begin(), c.end(), [&](const auto& x) { return x.slot == slot; });
}

}  // namespace locate::testing
