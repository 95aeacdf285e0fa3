#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "locate/protocol/params.hpp"
#include "locate/protocol/state.hpp"
#include "locate/sim/random_stream.hpp"
#include "locate/world/world.hpp"

namespace locate::protocol {

enum class Variant { kLocate, kLocateBasic, kFlooding, kProbabilistic };

const char* to_string(Variant variant);
/// Accepts "locate", "locate-basic", "flooding", "probabilistic".
std::optional<Variant> parse_variant(std::string_view name);

/// What a handler knows about the node it runs on.
struct NodeContext {
  NodeId id = 0;
  world::Role role = world::Role::kRelay;
  world::Position position;  // at the time of the input
};

/**
 * Dissemination scheme as pure transitions: each handler mutates the
 * per-emergency state and returns the effects for the event loop to apply.
 *
 * Handlers keep `state.timers` in step with the SetTimer/CancelTimer actions
 * they emit, and clear the fired slot at the start of on_timer.
 */
class Behavior {
 public:
  explicit Behavior(const ProtocolParams& params) : params_(params) {}
  virtual ~Behavior() = default;

  const ProtocolParams& params() const { return params_; }

  /// Source starts its own emergency.
  virtual Actions init_emergency(const NodeContext& node, PerEmergencyState& state,
                                 EmergencyId emergency, sim::SimTime t,
                                 sim::RandomStream& stream) const = 0;

  virtual Actions on_delivery(const NodeContext& node, PerEmergencyState& state,
                              const Message& msg, sim::SimTime t,
                              sim::RandomStream& stream) const = 0;

  virtual Actions on_timer(const NodeContext& node, PerEmergencyState& state, TimerSlot slot,
                           sim::SimTime t, sim::RandomStream& stream) const = 0;

  virtual Actions on_freeze_poll(const NodeContext& node, PerEmergencyState& state,
                                 sim::SimTime t) const;

 protected:
  // Keep the state's timer table and the emitted actions consistent.
  static void arm(PerEmergencyState& state, Actions& out, TimerSlot slot, sim::SimTime now,
                  sim::SimTime delay);
  static void disarm(PerEmergencyState& state, Actions& out, TimerSlot slot);
  static void mark_solved(PerEmergencyState& state, Actions& out, EmergencyId emergency);
  Message fresh_request(const NodeContext& node, EmergencyId emergency) const;
  Message own_reply(const NodeContext& node, const PerEmergencyState& state) const;
  static void check_delivery(const NodeContext& node, const Message& msg);

  ProtocolParams params_;
};

std::unique_ptr<Behavior> make_behavior(Variant variant, const ProtocolParams& params);

}  // namespace locate::protocol
