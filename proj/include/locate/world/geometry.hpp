#pragma once

#include <cmath>

namespace locate::world {

/// Planar position in meters.
struct Position {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Position&, const Position&) = default;
};

inline double distance(const Position& p, const Position& q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

/// Square arena [0, side] x [0, side].
struct Arena {
  double side = 5000.0;

  Position center() const { return {side / 2.0, side / 2.0}; }

  bool contains(const Position& p) const {
    return p.x >= 0.0 && p.x <= side && p.y >= 0.0 && p.y <= side;
  }

  Position clamp(const Position& p) const {
    return {std::fmin(std::fmax(p.x, 0.0), side), std::fmin(std::fmax(p.y, 0.0), side)};
  }
};

}  // namespace locate::world
