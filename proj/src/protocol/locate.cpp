#include <stdexcept>

#include "locate/protocol/contention.hpp"
#include "schemes.hpp"

namespace locate::protocol {

using world::Role;

void LocateBehavior::arm_dtn(PerEmergencyState& state, sim::SimTime t,
                             sim::RandomStream& stream, Actions& out) const {
  arm(state, out, TimerSlot::kDtn, t, stream.uniform(params_.cw_min, params_.cw_max));
}

void LocateBehavior::enter_dtn(PerEmergencyState& state, sim::SimTime t,
                               sim::RandomStream& stream, Actions& out) const {
  state.phase = Phase::kDtnActive;
  arm_dtn(state, t, stream, out);
}

void LocateBehavior::arm_acceptance(PerEmergencyState& state, double d, sim::SimTime t,
                                    sim::RandomStream& stream, Actions& out) const {
  arm(state, out, TimerSlot::kAcceptance, t,
      stream.uniform(0.0, acceptance_window(d, params_)));
}

Actions LocateBehavior::init_emergency(const NodeContext& node, PerEmergencyState& state,
                                       EmergencyId emergency, sim::SimTime t,
                                       sim::RandomStream& stream) const {
  if (state.phase != Phase::kUnaware) {
    throw std::logic_error("init_emergency: emergency already started");
  }
  Actions out;
  state.request = fresh_request(node, emergency);
  out.emplace_back(Transmit{*state.request});
  // The source keeps beaconing like a DTN node until it hears an E-REP.
  enter_dtn(state, t, stream, out);
  return out;
}

Actions LocateBehavior::on_delivery(const NodeContext& node, PerEmergencyState& state,
                                    const Message& msg, sim::SimTime t,
                                    sim::RandomStream& stream) const {
  check_delivery(node, msg);
  Actions out;
  if (msg.kind == MessageKind::kRequest) {
    on_request(node, state, msg, t, stream, out);
  } else {
    on_reply(node, state, msg, t, stream, out);
  }
  return out;
}

void LocateBehavior::on_request(const NodeContext& node, PerEmergencyState& state,
                                const Message& msg, sim::SimTime t, sim::RandomStream& stream,
                                Actions& out) const {
  const double d = world::distance(msg.tx_pos, node.position);

  if (node.role == Role::kSource) {
    if (state.phase == Phase::kSolved && state.reply && state.reply->ttl > 0 &&
        !state.live(TimerSlot::kAcceptance)) {
      arm_acceptance(state, d, t, stream, out);
    }
    return;
  }

  if (node.role == Role::kSolver) {
    // A solver answers every E-REQ it hears.
    if (!state.request) {
      state.request = msg;
      state.request_distance = d;
    }
    if (state.phase == Phase::kUnaware) {
      state.phase = Phase::kAccepting;
      arm(state, out, TimerSlot::kGuard, t, params_.cw_max);
    }
    if (!state.live(TimerSlot::kAcceptance)) {
      arm_acceptance(state, d, t, stream, out);
    }
    return;
  }

  switch (state.phase) {
    case Phase::kUnaware:
      state.phase = Phase::kAccepting;
      state.request = msg;
      state.request_distance = d;
      if (msg.ttl > 0) {
        arm(state, out, TimerSlot::kGuard, t, params_.cw_max);
      }
      break;
    case Phase::kAccepting:
      // Only a node stuck on an exhausted E-REQ picks up a fresher one.
      if (!state.live(TimerSlot::kGuard) && msg.ttl > 0) {
        state.request = msg;
        state.request_distance = d;
        arm(state, out, TimerSlot::kGuard, t, params_.cw_max);
      }
      break;
    case Phase::kForwarding:
      // Someone else already pushed the E-REQ further.
      disarm(state, out, TimerSlot::kForwarding);
      enter_dtn(state, t, stream, out);
      break;
    case Phase::kDtnActive: {
      if (msg.tx == node.id || !state.overheard.insert(msg.tx).second || !optimized_) {
        break;
      }
      if (state.overheard.size() == 1) {
        disarm(state, out, TimerSlot::kDtn);
        arm_dtn(state, t, stream, out);
      } else {
        const sim::SimTime due = *state.timer(TimerSlot::kDtn);
        state.dtn_remaining = due - t;
        disarm(state, out, TimerSlot::kDtn);
        state.freeze_pos = node.position;
        state.phase = Phase::kDtnFrozen;
        state.freeze_polling = true;
        out.emplace_back(StartFreezePoll{});
      }
      break;
    }
    case Phase::kDtnFrozen:
      if (optimized_ && msg.tx != node.id) {
        state.overheard.insert(msg.tx);
      }
      break;
    case Phase::kSolved:
      if (state.reply && state.reply->ttl > 0 && !state.live(TimerSlot::kAcceptance)) {
        arm_acceptance(state, d, t, stream, out);
      }
      break;
  }
}

void LocateBehavior::on_reply(const NodeContext& node, PerEmergencyState& state,
                              const Message& msg, sim::SimTime t, sim::RandomStream& stream,
                              Actions& out) const {
  const double d = world::distance(msg.tx_pos, node.position);

  // Someone answered: pending replies and all E-REQ activity stop.
  disarm(state, out, TimerSlot::kAcceptance);
  disarm(state, out, TimerSlot::kGuard);
  disarm(state, out, TimerSlot::kForwarding);
  disarm(state, out, TimerSlot::kDtn);
  if (state.freeze_polling) {
    state.freeze_polling = false;
    out.emplace_back(StopFreezePoll{});
  }
  state.freeze_pos.reset();
  state.dtn_remaining.reset();
  mark_solved(state, out, msg.emergency);

  if (!state.reply || msg.ttl > state.reply->ttl) {
    state.reply = msg;
    state.reply_distance = d;
  }

  if (node.role == Role::kSource) {
    return;
  }
  // Re-relay even when already solved, at most once per CW_max and never at ttl 0.
  const bool cooling =
      state.erep_relayed_at && t - *state.erep_relayed_at < params_.cw_max;
  if (msg.ttl > 0 && !cooling && !state.live(TimerSlot::kReplyRelay)) {
    arm(state, out, TimerSlot::kReplyRelay, t,
        stream.uniform(0.0, forwarding_window(d, params_)));
  }
}

Actions LocateBehavior::on_timer(const NodeContext& node, PerEmergencyState& state,
                                 TimerSlot slot, sim::SimTime t,
                                 sim::RandomStream& stream) const {
  state.timer(slot).reset();
  Actions out;
  switch (slot) {
    case TimerSlot::kAcceptance:
      if (node.role == Role::kSolver) {
        const Message reply = own_reply(node, state);
        out.emplace_back(Transmit{reply});
        disarm(state, out, TimerSlot::kGuard);
        state.reply = reply;
        mark_solved(state, out, reply.emergency);
      } else if (state.reply && state.reply->ttl > 0) {
        out.emplace_back(Transmit{state.reply->relayed_by(node.id, node.position)});
      }
      break;
    case TimerSlot::kGuard:
      if (state.phase == Phase::kAccepting && node.role == Role::kRelay) {
        state.phase = Phase::kForwarding;
        arm(state, out, TimerSlot::kForwarding, t,
            stream.uniform(0.0, forwarding_window(state.request_distance, params_)));
      }
      break;
    case TimerSlot::kForwarding:
      out.emplace_back(Transmit{state.request->relayed_by(node.id, node.position)});
      enter_dtn(state, t, stream, out);
      break;
    case TimerSlot::kReplyRelay:
      out.emplace_back(Transmit{state.reply->relayed_by(node.id, node.position)});
      state.erep_relayed_at = t;
      break;
    case TimerSlot::kDtn:
      if (node.role == Role::kSource) {
        out.emplace_back(Transmit{fresh_request(node, state.request->emergency)});
      } else {
        const double p =
            optimized_ ? dtn_probability(params_.p_start, state.overheard.size()) : 1.0;
        if (stream.bernoulli(p)) {
          out.emplace_back(Transmit{state.request->relayed_by(node.id, node.position)});
        }
      }
      if (state.phase != Phase::kSolved) {
        arm_dtn(state, t, stream, out);
      }
      break;
  }
  return out;
}

Actions LocateBehavior::on_freeze_poll(const NodeContext& node, PerEmergencyState& state,
                                       sim::SimTime t) const {
  Actions out;
  if (state.phase != Phase::kDtnFrozen) {
    state.freeze_polling = false;
    return out;
  }
  if (world::distance(node.position, *state.freeze_pos) >= params_.dtn_dist) {
    state.phase = Phase::kDtnActive;
    state.freeze_polling = false;
    state.freeze_pos.reset();
    arm(state, out, TimerSlot::kDtn, t, *state.dtn_remaining);
    state.dtn_remaining.reset();
  } else {
    out.emplace_back(StartFreezePoll{});
  }
  return out;
}

}  // namespace locate::protocol
