#include <array>
#include <map>
#include <memory>
#include <stdexcept>
#include <type_traits>
#include <variant>
#include <vector>

#include "locate/experiments/runner.hpp"
#include "locate/sim/event_queue.hpp"

namespace locate::experiments {

using protocol::Action;
using protocol::Actions;
using protocol::EmergencyId;
using protocol::Message;
using protocol::MessageKind;
using protocol::PerEmergencyState;
using protocol::Phase;
using protocol::TimerSlot;
using sim::SimTime;
using world::NodeId;

void ScenarioConfig::validate() const {
  auto fail = [](const char* key, const char* why) {
    throw std::invalid_argument(std::string(key) + ": " + why);
  };
  if (!(side_m > 0.0)) fail("side_m", "must be > 0");
  if (!(tau >= 0.0 && tau <= 1.0)) fail("tau", "must be in [0, 1]");
  if (runs < 1) fail("runs", "must be >= 1");
  if (!(horizon_s > 0.0)) fail("horizon_s", "must be > 0");
  radio.validate();
  params.validate();
}

namespace {

struct TimerFired {
  NodeId node;
  EmergencyId emergency;
  TimerSlot slot;
};
struct Delivery {
  NodeId node;
  std::size_t reception;  // index into the run's reception log
};
struct LegEnd {
  NodeId node;
};
struct FreezePoll {
  NodeId node;
  EmergencyId emergency;
};
using EventKind = std::variant<TimerFired, Delivery, LegEnd, FreezePoll>;

struct EmergencySlot {
  PerEmergencyState state;
  std::array<std::optional<sim::EventHandle>, protocol::kTimerSlots> handles{};
  std::optional<sim::EventHandle> poll;
};

struct ReceptionRecord {
  radio::Reception reception;
  bool collided = false;
};

class Simulation {
 public:
  Simulation(const ScenarioConfig& config, world::World world, sim::RandomStream& stream,
             RunObserver* observer)
      : config_(config),
        world_(std::move(world)),
        stream_(stream),
        observer_(observer),
        behavior_(protocol::make_behavior(config.protocol, config.params)),
        nodes_(world_.size()),
        aware_(world_.size(), false),
        solved_(world_.size(), false),
        recent_(world_.size()) {}

  RunResult run() {
    RunResult result;
    result.seed = stream_.seed();

    for (const auto& node : world_.nodes()) {
      if (!node.stationary()) {
        queue_.schedule(node.leg.end, LegEnd{node.id});
      }
    }

    constexpr NodeId kSource = 0;
    constexpr EmergencyId kEmergency = 0;
    mark_aware(kSource, 0.0);
    {
      EmergencySlot& slot = nodes_[kSource][kEmergency];
      const Phase before = slot.state.phase;
      Actions actions = behavior_->init_emergency(context(kSource, 0.0), slot.state,
                                                  kEmergency, 0.0, stream_);
      apply(kSource, kEmergency, actions, 0.0, before);
    }

    SimTime end_time = 0.0;
    while (!finished()) {
      const auto next = queue_.peek_time();
      if (!next) {
        break;
      }
      if (*next > config_.horizon_s) {
        end_time = config_.horizon_s;
        break;
      }
      auto ev = queue_.pop_next();
      end_time = ev->time;
      if (observer_) observer_->on_event(ev->time);
      std::visit([&](auto& e) { dispatch(e, ev->time); }, ev->payload);
    }

    result.solved = ert_.has_value();
    result.ert_s = ert_;
    result.ereq_count = ereq_count_;
    result.erep_count = erep_count_;
    result.end_time_s = end_time;
    return result;
  }

 private:
  bool finished() const { return unsolved_aware_ == 0; }

  protocol::NodeContext context(NodeId id, SimTime t) const {
    return protocol::NodeContext{id, world_.node(id).role, world_.position(id, t)};
  }

  void mark_aware(NodeId id, SimTime t) {
    if (aware_[id]) return;
    aware_[id] = true;
    if (!solved_[id]) ++unsolved_aware_;
    if (observer_) observer_->on_aware(t, id);
  }

  void mark_solved(NodeId id, SimTime t) {
    if (solved_[id]) return;
    solved_[id] = true;
    if (aware_[id]) --unsolved_aware_;
    if (world_.node(id).role == world::Role::kSource && !ert_) {
      ert_ = t;
    }
  }

  void dispatch(const LegEnd& e, SimTime t) {
    const auto& leg = world_.next_leg(e.node, t, stream_);
    queue_.schedule(leg.end, LegEnd{e.node});
  }

  void dispatch(const TimerFired& e, SimTime t) {
    EmergencySlot& slot = nodes_[e.node][e.emergency];
    slot.handles[static_cast<std::size_t>(e.slot)].reset();
    const Phase before = slot.state.phase;
    Actions actions = behavior_->on_timer(context(e.node, t), slot.state, e.slot, t, stream_);
    apply(e.node, e.emergency, actions, t, before);
  }

  void dispatch(const FreezePoll& e, SimTime t) {
    EmergencySlot& slot = nodes_[e.node][e.emergency];
    slot.poll.reset();
    const Phase before = slot.state.phase;
    Actions actions = behavior_->on_freeze_poll(context(e.node, t), slot.state, t);
    apply(e.node, e.emergency, actions, t, before);
  }

  void dispatch(const Delivery& e, SimTime t) {
    const ReceptionRecord& rec = receptions_[e.reception];
    if (rec.collided) {
      return;
    }
    const Message& msg = rec.reception.message;
    if (observer_) observer_->on_delivery(t, e.node, msg);
    if (msg.kind == MessageKind::kRequest) {
      mark_aware(e.node, t);
    }
    EmergencySlot& slot = nodes_[e.node][msg.emergency];
    const Phase before = slot.state.phase;
    Actions actions = behavior_->on_delivery(context(e.node, t), slot.state, msg, t, stream_);
    apply(e.node, msg.emergency, actions, t, before);
  }

  void apply(NodeId node, EmergencyId emergency, const Actions& actions, SimTime t,
             Phase before) {
    for (const Action& action : actions) {
      std::visit([&](const auto& a) { apply_one(node, emergency, a, t); }, action);
    }
    const Phase after = nodes_[node][emergency].state.phase;
    if (observer_ && after != before) {
      observer_->on_phase(t, node, before, after);
    }
  }

  void apply_one(NodeId node, EmergencyId, const protocol::Transmit& a, SimTime t) {
    if (a.message.kind == MessageKind::kRequest) {
      ++ereq_count_;
    } else {
      ++erep_count_;
    }
    if (observer_) observer_->on_transmit(t, node, a.message);
    auto heard = radio::broadcast(node, t, a.message, world_, config_.radio, stream_);
    const bool collisions = config_.radio.interference == radio::Interference::kCollision;
    for (auto& r : heard) {
      const std::size_t id = receptions_.size();
      receptions_.push_back(ReceptionRecord{std::move(r), false});
      const radio::Reception& fresh = receptions_.back().reception;
      if (collisions) {
        auto& recent = recent_[fresh.receiver];
        std::erase_if(recent, [&](std::size_t other) { return receptions_[other].reception.end < t; });
        for (std::size_t other : recent) {
          auto& prev = receptions_[other];
          if (prev.reception.start <= fresh.end && fresh.start <= prev.reception.end) {
            prev.collided = true;
            receptions_.back().collided = true;
          }
        }
        recent.push_back(id);
      }
      queue_.schedule(fresh.end, Delivery{fresh.receiver, id});
    }
  }

  void apply_one(NodeId node, EmergencyId emergency, const protocol::SetTimer& a, SimTime t) {
    auto& handle = nodes_[node][emergency].handles[static_cast<std::size_t>(a.slot)];
    if (handle) queue_.cancel(*handle);
    handle = queue_.schedule(t + a.delay, TimerFired{node, emergency, a.slot});
  }

  void apply_one(NodeId node, EmergencyId emergency, const protocol::CancelTimer& a, SimTime) {
    auto& handle = nodes_[node][emergency].handles[static_cast<std::size_t>(a.slot)];
    if (handle) {
      queue_.cancel(*handle);
      handle.reset();
    }
  }

  void apply_one(NodeId node, EmergencyId, const protocol::MarkSolved&, SimTime t) {
    mark_solved(node, t);
  }

  void apply_one(NodeId node, EmergencyId emergency, const protocol::StartFreezePoll&,
                 SimTime t) {
    auto& poll = nodes_[node][emergency].poll;
    if (poll) queue_.cancel(*poll);
    poll = queue_.schedule(t + protocol::kFreezePollPeriod, FreezePoll{node, emergency});
  }

  void apply_one(NodeId node, EmergencyId emergency, const protocol::StopFreezePoll&, SimTime) {
    auto& poll = nodes_[node][emergency].poll;
    if (poll) {
      queue_.cancel(*poll);
      poll.reset();
    }
  }

  const ScenarioConfig& config_;
  world::World world_;
  sim::RandomStream& stream_;
  RunObserver* observer_;
  std::unique_ptr<protocol::Behavior> behavior_;
  sim::EventQueue<EventKind> queue_;

  std::vector<std::map<EmergencyId, EmergencySlot>> nodes_;
  std::vector<bool> aware_;
  std::vector<bool> solved_;
  std::size_t unsolved_aware_ = 0;
  std::vector<ReceptionRecord> receptions_;
  std::vector<std::vector<std::size_t>> recent_;  // collision window per receiver

  std::optional<SimTime> ert_;
  std::uint64_t ereq_count_ = 0;
  std::uint64_t erep_count_ = 0;
};

}  // namespace

RunResult simulate(const ScenarioConfig& config, world::World world, sim::RandomStream& stream,
                   RunObserver* observer) {
  config.validate();
  return Simulation(config, std::move(world), stream, observer).run();
}

RunResult run_once(const ScenarioConfig& config, std::size_t run_index, RunObserver* observer) {
  const std::uint64_t seed = sim::run_seed(config.base_seed, run_index);
  sim::RandomStream stream(seed);
  world::World world = world::init_world(config.n, config.tau, config.side_m, stream);
  RunResult result = simulate(config, std::move(world), stream, observer);
  result.run_index = run_index;
  return result;
}

}  // namespace locate::experiments
