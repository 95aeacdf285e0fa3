#include <stdexcept>

#include "schemes.hpp"

namespace locate::protocol {

using world::Role;

double FloodingBehavior::offset(sim::RandomStream& stream) const {
  return stream.uniform(0.0, params_.cw_max);
}

bool FloodingBehavior::relay_allowed(sim::RandomStream& stream) const {
  return !gated_ || stream.bernoulli(params_.q_flood);
}

Actions FloodingBehavior::init_emergency(const NodeContext& node, PerEmergencyState& state,
                                         EmergencyId emergency, sim::SimTime t,
                                         sim::RandomStream& stream) const {
  if (state.phase != Phase::kUnaware) {
    throw std::logic_error("init_emergency: emergency already started");
  }
  Actions out;
  state.request = fresh_request(node, emergency);
  state.phase = Phase::kDtnActive;
  out.emplace_back(Transmit{*state.request});
  // The source repeats its E-REQ with the same [0, CW_max] offset as every
  // other flooding retransmission until it hears an E-REP.
  arm(state, out, TimerSlot::kDtn, t, offset(stream));
  return out;
}

Actions FloodingBehavior::on_delivery(const NodeContext& node, PerEmergencyState& state,
                                      const Message& msg, sim::SimTime t,
                                      sim::RandomStream& stream) const {
  check_delivery(node, msg);
  Actions out;

  if (msg.kind == MessageKind::kRequest) {
    if (node.role == Role::kSolver) {
      if (!state.request) state.request = msg;
      if (state.phase == Phase::kUnaware) state.phase = Phase::kAccepting;
      if (!state.live(TimerSlot::kAcceptance)) {
        arm(state, out, TimerSlot::kAcceptance, t, offset(stream));
      }
    } else if (state.phase == Phase::kSolved) {
      // Already solved: answer instead of forwarding.
      if (state.reply && state.reply->ttl > 0 && !state.live(TimerSlot::kAcceptance)) {
        arm(state, out, TimerSlot::kAcceptance, t, offset(stream));
      }
    } else if (state.phase == Phase::kUnaware) {
      state.phase = Phase::kAccepting;
      state.request = msg;
      if (msg.ttl > 0) {
        arm(state, out, TimerSlot::kForwarding, t, offset(stream));
      }
    }
    return out;
  }

  // E-REP
  disarm(state, out, TimerSlot::kForwarding);
  if (node.role == Role::kSource) {
    disarm(state, out, TimerSlot::kDtn);
  }
  mark_solved(state, out, msg.emergency);
  if (!state.reply || msg.ttl > state.reply->ttl) {
    state.reply = msg;
  }
  if (node.role != Role::kSource && !state.reply_forwarded && msg.ttl > 0 &&
      !state.live(TimerSlot::kReplyRelay)) {
    arm(state, out, TimerSlot::kReplyRelay, t, offset(stream));
  }
  return out;
}

Actions FloodingBehavior::on_timer(const NodeContext& node, PerEmergencyState& state,
                                   TimerSlot slot, sim::SimTime t,
                                   sim::RandomStream& stream) const {
  state.timer(slot).reset();
  Actions out;
  switch (slot) {
    case TimerSlot::kAcceptance:
      if (node.role == Role::kSolver) {
        const Message reply = own_reply(node, state);
        out.emplace_back(Transmit{reply});
        state.reply = reply;
        mark_solved(state, out, reply.emergency);
      } else if (state.reply && state.reply->ttl > 0 && relay_allowed(stream)) {
        out.emplace_back(Transmit{state.reply->relayed_by(node.id, node.position)});
      }
      break;
    case TimerSlot::kForwarding:
      state.request_forwarded = true;
      if (state.phase != Phase::kSolved && relay_allowed(stream)) {
        out.emplace_back(Transmit{state.request->relayed_by(node.id, node.position)});
      }
      break;
    case TimerSlot::kReplyRelay:
      state.reply_forwarded = true;
      if (relay_allowed(stream)) {
        out.emplace_back(Transmit{state.reply->relayed_by(node.id, node.position)});
      }
      break;
    case TimerSlot::kDtn:
      // Only the source runs this slot: periodic origin beacon, never gated.
      out.emplace_back(Transmit{fresh_request(node, state.request->emergency)});
      if (state.phase != Phase::kSolved) {
        arm(state, out, TimerSlot::kDtn, t, offset(stream));
      }
      break;
    case TimerSlot::kGuard:
      break;
  }
  return out;
}

}  // namespace locate::protocol
