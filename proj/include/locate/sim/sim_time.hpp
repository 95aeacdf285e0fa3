#pragma once

namespace locate::sim {

/// Simulated time in seconds since run start.
using SimTime = double;

/// One simulated day, the default run horizon.
inline constexpr SimTime kDefaultHorizon = 86400.0;

}  // namespace locate::sim
