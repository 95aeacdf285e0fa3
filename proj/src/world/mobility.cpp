#include "locate/world/mobility.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace locate::world {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Time to reach the wall along one axis, given velocity component v.
double axis_hit_time(double coord, double v, double side) {
  if (v > 0.0) {
    return (side - coord) / v;
  }
  if (v < 0.0) {
    return -coord / v;
  }
  return kInf;
}

}  // namespace

MobilityLeg stationary_leg(const Position& at) {
  MobilityLeg leg;
  leg.origin = at;
  leg.destination = at;
  leg.start = 0.0;
  leg.end = kInf;
  return leg;
}

Position position_on(const MobilityLeg& leg, const Arena& arena, sim::SimTime t) {
  if (leg.stationary()) {
    return leg.origin;
  }
  if (t < leg.start || t > leg.end) {
    throw std::logic_error("position_on: t=" + std::to_string(t) + " outside leg [" +
                           std::to_string(leg.start) + ", " + std::to_string(leg.end) + "]");
  }
  if (t == leg.end) {
    return leg.destination;
  }
  const double travelled = leg.speed * (t - leg.start);
  return arena.clamp({leg.origin.x + travelled * std::cos(leg.heading),
                      leg.origin.y + travelled * std::sin(leg.heading)});
}

bool points_inward(const Position& from, double heading, const Arena& arena) {
  const double c = std::cos(heading);
  const double s = std::sin(heading);
  if (from.x <= 0.0 && !(c > 0.0)) return false;
  if (from.x >= arena.side && !(c < 0.0)) return false;
  if (from.y <= 0.0 && !(s > 0.0)) return false;
  if (from.y >= arena.side && !(s < 0.0)) return false;
  return true;
}

MobilityLeg make_leg(const Position& from, sim::SimTime t, double heading, double speed,
                     const Arena& arena) {
  if (!points_inward(from, heading, arena)) {
    throw std::logic_error("make_leg: heading points out of the arena");
  }
  const double vx = speed * std::cos(heading);
  const double vy = speed * std::sin(heading);
  const double tx = axis_hit_time(from.x, vx, arena.side);
  const double ty = axis_hit_time(from.y, vy, arena.side);
  const double dt = std::fmin(tx, ty);

  MobilityLeg leg;
  leg.origin = from;
  leg.heading = heading;
  leg.speed = speed;
  leg.start = t;
  leg.end = t + dt;

  Position dest = arena.clamp({from.x + vx * dt, from.y + vy * dt});
  // Snap the wall coordinate so the next leg starts exactly on the boundary.
  if (tx <= ty) dest.x = vx > 0.0 ? arena.side : 0.0;
  if (ty <= tx) dest.y = vy > 0.0 ? arena.side : 0.0;
  leg.destination = dest;
  return leg;
}

MobilityLeg start_leg(const Position& from, sim::SimTime t, const Arena& arena,
                      sim::RandomStream& stream) {
  double heading = stream.uniform(0.0, 2.0 * std::numbers::pi);
  while (!points_inward(from, heading, arena)) {
    heading = stream.uniform(0.0, 2.0 * std::numbers::pi);
  }
  const double speed = stream.uniform(kMinSpeed, kMaxSpeed);
  return make_leg(from, t, heading, speed, arena);
}

}  // namespace locate::world
