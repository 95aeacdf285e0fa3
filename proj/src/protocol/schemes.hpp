#pragma once

#include "locate/protocol/behavior.hpp"

namespace locate::protocol {

// LOCATE: biased acceptance/forwarding contention followed by the DTN phase.
// Without DTN optimizations (basic variant) the DTN phase always retransmits
// and never reschedules or freezes.
class LocateBehavior final : public Behavior {
 public:
  LocateBehavior(const ProtocolParams& params, bool dtn_optimizations)
      : Behavior(params), optimized_(dtn_optimizations) {}

  Actions init_emergency(const NodeContext& node, PerEmergencyState& state,
                         EmergencyId emergency, sim::SimTime t,
                         sim::RandomStream& stream) const override;
  Actions on_delivery(const NodeContext& node, PerEmergencyState& state, const Message& msg,
                      sim::SimTime t, sim::RandomStream& stream) const override;
  Actions on_timer(const NodeContext& node, PerEmergencyState& state, TimerSlot slot,
                   sim::SimTime t, sim::RandomStream& stream) const override;
  Actions on_freeze_poll(const NodeContext& node, PerEmergencyState& state,
                         sim::SimTime t) const override;

 private:
  void on_request(const NodeContext& node, PerEmergencyState& state, const Message& msg,
                  sim::SimTime t, sim::RandomStream& stream, Actions& out) const;
  void on_reply(const NodeContext& node, PerEmergencyState& state, const Message& msg,
                sim::SimTime t, sim::RandomStream& stream, Actions& out) const;
  void enter_dtn(PerEmergencyState& state, sim::SimTime t, sim::RandomStream& stream,
                 Actions& out) const;
  void arm_dtn(PerEmergencyState& state, sim::SimTime t, sim::RandomStream& stream,
               Actions& out) const;
  void arm_acceptance(PerEmergencyState& state, double d, sim::SimTime t,
                      sim::RandomStream& stream, Actions& out) const;

  bool optimized_;
};

// Epidemic baselines: every aware node rebroadcasts each message kind once
// after a uniform [0, CW_max] offset. The gated variant additionally lets
// each relay transmission through only with probability q.
class FloodingBehavior final : public Behavior {
 public:
  FloodingBehavior(const ProtocolParams& params, bool gated)
      : Behavior(params), gated_(gated) {}

  Actions init_emergency(const NodeContext& node, PerEmergencyState& state,
                         EmergencyId emergency, sim::SimTime t,
                         sim::RandomStream& stream) const override;
  Actions on_delivery(const NodeContext& node, PerEmergencyState& state, const Message& msg,
                      sim::SimTime t, sim::RandomStream& stream) const override;
  Actions on_timer(const NodeContext& node, PerEmergencyState& state, TimerSlot slot,
                   sim::SimTime t, sim::RandomStream& stream) const override;

 private:
  double offset(sim::RandomStream& stream) const;
  bool relay_allowed(sim::RandomStream& stream) const;

  bool gated_;
};

}  // namespace locate::protocol
