#pragma once

#include "locate/sim/random_stream.hpp"
#include "locate/sim/sim_time.hpp"
#include "locate/world/geometry.hpp"

namespace locate::world {

inline constexpr double kMinSpeed = 0.5;  // m/s
inline constexpr double kMaxSpeed = 3.0;  // m/s

/**
 * One straight-line Random Direction leg: constant heading and speed from
 * `origin` at `start` until the first boundary hit at `end`.
 *
 * A stationary node holds a leg with zero speed and an infinite end time.
 */
struct MobilityLeg {
  Position origin;
  double heading = 0.0;  // radians, [0, 2*pi)
  double speed = 0.0;    // m/s
  sim::SimTime start = 0.0;
  sim::SimTime end = 0.0;
  Position destination;  // exact boundary point reached at `end`

  bool stationary() const { return speed == 0.0; }
};

MobilityLeg stationary_leg(const Position& at);

/// Kinematic position on the leg. Throws std::logic_error outside [start, end].
Position position_on(const MobilityLeg& leg, const Arena& arena, sim::SimTime t);

/// Draws heading (inward-pointing only) and speed, and solves for the boundary hit.
MobilityLeg start_leg(const Position& from, sim::SimTime t, const Arena& arena,
                      sim::RandomStream& stream);

/// Same, with heading and speed given; heading must point strictly into the arena.
MobilityLeg make_leg(const Position& from, sim::SimTime t, double heading, double speed,
                     const Arena& arena);

/// True when a ray from `from` along `heading` immediately enters the arena interior.
bool points_inward(const Position& from, double heading, const Arena& arena);

}  // namespace locate::world
