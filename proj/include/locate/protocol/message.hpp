#pragma once

#include <cstdint>
#include <optional>

#include "locate/world/geometry.hpp"
#include "locate/world/world.hpp"

namespace locate::protocol {

using EmergencyId = std::uint32_t;
using world::NodeId;

enum class MessageKind : std::uint8_t { kRequest, kReply };

const char* to_string(MessageKind kind);

/// E-REQ / E-REP broadcast record.
struct Message {
  MessageKind kind = MessageKind::kRequest;
  EmergencyId emergency = 0;
  NodeId origin = 0;                 // emergency source
  std::optional<NodeId> solver;      // E-REP only
  NodeId tx = 0;                     // last-hop transmitter
  world::Position tx_pos;            // transmitter position at send time
  int ttl = 0;                       // remaining hop budget

  /// Copy re-stamped for retransmission by `self`, spending one hop.
  Message relayed_by(NodeId self, const world::Position& at) const {
    Message m = *this;
    m.tx = self;
    m.tx_pos = at;
    m.ttl = ttl - 1;
    return m;
  }
};

}  // namespace locate::protocol
