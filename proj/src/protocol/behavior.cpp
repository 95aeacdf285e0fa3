#include "locate/protocol/behavior.hpp"

#include <stdexcept>

#include "schemes.hpp"

namespace locate::protocol {

const char* to_string(MessageKind kind) {
  switch (kind) {
    case MessageKind::kRequest:
      return "E-REQ";
    case MessageKind::kReply:
      return "E-REP";
  }
  return "?";
}

const char* to_string(Phase phase) {
  switch (phase) {
    case Phase::kUnaware:
      return "unaware";
    case Phase::kAccepting:
      return "accepting";
    case Phase::kForwarding:
      return "forwarding";
    case Phase::kDtnActive:
      return "dtn-active";
    case Phase::kDtnFrozen:
      return "dtn-frozen";
    case Phase::kSolved:
      return "solved";
  }
  return "?";
}

const char* to_string(TimerSlot slot) {
  switch (slot) {
    case TimerSlot::kAcceptance:
      return "acceptance";
    case TimerSlot::kGuard:
      return "guard";
    case TimerSlot::kForwarding:
      return "forwarding";
    case TimerSlot::kReplyRelay:
      return "reply-relay";
    case TimerSlot::kDtn:
      return "dtn";
  }
  return "?";
}

const char* to_string(Variant variant) {
  switch (variant) {
    case Variant::kLocate:
      return "locate";
    case Variant::kLocateBasic:
      return "locate-basic";
    case Variant::kFlooding:
      return "flooding";
    case Variant::kProbabilistic:
      return "probabilistic";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
  for (Variant v : {Variant::kLocate, Variant::kLocateBasic, Variant::kFlooding,
                    Variant::kProbabilistic}) {
    if (name == to_string(v)) {
      return v;
    }
  }
  return std::nullopt;
}

Actions Behavior::on_freeze_poll(const NodeContext&, PerEmergencyState&, sim::SimTime) const {
  return {};
}

void Behavior::arm(PerEmergencyState& state, Actions& out, TimerSlot slot, sim::SimTime now,
                   sim::SimTime delay) {
  if (delay < 0.0) {
    throw std::logic_error("arm: negative timer delay");
  }
  state.timer(slot) = now + delay;
  out.emplace_back(SetTimer{slot, delay});
}

void Behavior::disarm(PerEmergencyState& state, Actions& out, TimerSlot slot) {
  if (state.live(slot)) {
    state.timer(slot).reset();
    out.emplace_back(CancelTimer{slot});
  }
}

void Behavior::mark_solved(PerEmergencyState& state, Actions& out, EmergencyId emergency) {
  if (state.phase != Phase::kSolved) {
    state.phase = Phase::kSolved;
    out.emplace_back(MarkSolved{emergency});
  }
}

Message Behavior::fresh_request(const NodeContext& node, EmergencyId emergency) const {
  Message m;
  m.kind = MessageKind::kRequest;
  m.emergency = emergency;
  m.origin = node.id;
  m.tx = node.id;
  m.tx_pos = node.position;
  m.ttl = params_.ttl_init;
  return m;
}

Message Behavior::own_reply(const NodeContext& node, const PerEmergencyState& state) const {
  if (!state.request) {
    throw std::logic_error("own_reply: no E-REQ to answer");
  }
  Message m;
  m.kind = MessageKind::kReply;
  m.emergency = state.request->emergency;
  m.origin = state.request->origin;
  m.solver = node.id;
  m.tx = node.id;
  m.tx_pos = node.position;
  m.ttl = params_.ttl_init;
  return m;
}

void Behavior::check_delivery(const NodeContext& node, const Message& msg) {
  if (msg.tx == node.id) {
    throw std::logic_error("delivery of a node's own transmission");
  }
  if (msg.kind != MessageKind::kRequest && msg.kind != MessageKind::kReply) {
    throw std::logic_error("unknown message kind");
  }
}

std::unique_ptr<Behavior> make_behavior(Variant variant, const ProtocolParams& params) {
  params.validate();
  switch (variant) {
    case Variant::kLocate:
      return std::make_unique<LocateBehavior>(params, /*dtn_optimizations=*/true);
    case Variant::kLocateBasic:
      return std::make_unique<LocateBehavior>(params, /*dtn_optimizations=*/false);
    case Variant::kFlooding:
      return std::make_unique<FloodingBehavior>(params, /*gated=*/false);
    case Variant::kProbabilistic:
      return std::make_unique<FloodingBehavior>(params, /*gated=*/true);
  }
  throw std::logic_error("make_behavior: unknown variant");
}

}  // namespace locate::protocol
