#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "locate/protocol/message.hpp"
#include "locate/sim/sim_time.hpp"

namespace locate::protocol {

/// Per-emergency phase. Numeric values 0-4 follow the state chart.
enum class Phase : std::uint8_t {
  kUnaware = 0,
  kAccepting = 1,
  kForwarding = 2,
  kDtnActive = 3,
  kDtnFrozen = 4,
  kSolved = 5,
};

const char* to_string(Phase phase);

enum class TimerSlot : std::uint8_t {
  kAcceptance,  // E-REP reply (own or cached)
  kGuard,       // CW_max wait before the forwarding contention
  kForwarding,  // E-REQ rebroadcast
  kReplyRelay,  // E-REP rebroadcast
  kDtn,         // periodic store-and-forward rebroadcast
};
inline constexpr std::size_t kTimerSlots = 5;

const char* to_string(TimerSlot slot);

/// A node's protocol state for one emergency.
struct PerEmergencyState {
  Phase phase = Phase::kUnaware;
  // Due time of each live timer; the event loop owns the matching handles.
  std::array<std::optional<sim::SimTime>, kTimerSlots> timers{};

  std::optional<Message> request;   // E-REQ this node (re)broadcasts
  double request_distance = 0.0;    // distance to its transmitter on receipt
  std::optional<Message> reply;     // best cached E-REP (highest ttl)
  double reply_distance = 0.0;

  std::optional<sim::SimTime> dtn_remaining;
  std::optional<world::Position> freeze_pos;
  bool freeze_polling = false;
  std::set<NodeId> overheard;
  std::optional<sim::SimTime> erep_relayed_at;

  // One-shot bookkeeping for the flooding baselines.
  bool request_forwarded = false;
  bool reply_forwarded = false;

  bool live(TimerSlot slot) const { return timers[static_cast<std::size_t>(slot)].has_value(); }
  std::optional<sim::SimTime>& timer(TimerSlot slot) {
    return timers[static_cast<std::size_t>(slot)];
  }
};

struct Transmit {
  Message message;
};
struct SetTimer {
  TimerSlot slot;
  sim::SimTime delay;
};
struct CancelTimer {
  TimerSlot slot;
};
struct MarkSolved {
  EmergencyId emergency;
};
struct StartFreezePoll {};
struct StopFreezePoll {};

using Action = std::variant<Transmit, SetTimer, CancelTimer, MarkSolved, StartFreezePoll,
                            StopFreezePoll>;
using Actions = std::vector<Action>;

}  // namespace locate::protocol
