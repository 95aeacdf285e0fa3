#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "locate/sim/sim_time.hpp"

namespace locate::sim {

/// Opaque cancellation token returned by EventQueue::schedule.
struct EventHandle {
  std::uint64_t seq = 0;
  friend bool operator==(EventHandle, EventHandle) = default;
};

template <typename Payload>
struct Event {
  SimTime time;
  std::uint64_t seq;
  Payload payload;
};

/**
 * Time-ordered event queue with a built-in simulation clock.
 *
 * Events pop in (time, seq) lexicographic order, seq being assigned at
 * scheduling time. Cancellation tombstones the sequence number; cancelled
 * entries are skipped lazily when they reach the front of the heap.
 */
template <typename Payload>
class EventQueue {
 public:
  EventHandle schedule(SimTime time, Payload payload) {
    if (time < now_) {
      throw std::logic_error("EventQueue::schedule: event time " + std::to_string(time) +
                             " precedes clock " + std::to_string(now_));
    }
    const std::uint64_t seq = next_seq_++;
    status_.push_back(Status::kPending);
    heap_.push_back(Event<Payload>{time, seq, std::move(payload)});
    std::push_heap(heap_.begin(), heap_.end(), Later{});
    ++live_;
    return EventHandle{seq};
  }

  EventHandle schedule_in(SimTime delay, Payload payload) {
    return schedule(now_ + delay, std::move(payload));
  }

  /// Cancelling an already popped or cancelled handle is a no-op.
  void cancel(EventHandle handle) {
    if (handle.seq >= next_seq_ || status_[handle.seq] != Status::kPending) {
      return;
    }
    status_[handle.seq] = Status::kCancelled;
    --live_;
  }

  std::optional<Event<Payload>> pop_next() {
    skip_cancelled();
    if (heap_.empty()) {
      return std::nullopt;
    }
    std::pop_heap(heap_.begin(), heap_.end(), Later{});
    Event<Payload> ev = std::move(heap_.back());
    heap_.pop_back();
    now_ = ev.time;
    status_[ev.seq] = Status::kDone;
    --live_;
    return ev;
  }

  /// Time of the next live event without popping it.
  std::optional<SimTime> peek_time() {
    skip_cancelled();
    if (heap_.empty()) {
      return std::nullopt;
    }
    return heap_.front().time;
  }

  SimTime now() const { return now_; }
  std::size_t size() const { return live_; }
  bool empty() const { return live_ == 0; }

 private:
  struct Later {
    bool operator()(const Event<Payload>& a, const Event<Payload>& b) const {
      if (a.time != b.time) {
        return a.time > b.time;
      }
      return a.seq > b.seq;
    }
  };

  enum class Status : std::uint8_t { kPending, kCancelled, kDone };

  void skip_cancelled() {
    while (!heap_.empty() && status_[heap_.front().seq] == Status::kCancelled) {
      std::pop_heap(heap_.begin(), heap_.end(), Later{});
      heap_.pop_back();
    }
  }

  std::vector<Event<Payload>> heap_;
  // Indexed by seq; sequence numbers are dense from zero.
  std::vector<Status> status_;
  std::uint64_t next_seq_ = 0;
  std::size_t live_ = 0;
  SimTime now_ = 0.0;
};

}  // namespace locate::sim
