#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "locate/sim/random_stream.hpp"
#include "locate/world/geometry.hpp"
#include "locate/world/mobility.hpp"
#include "locate/world/world.hpp"

namespace locate::world {
namespace {

constexpr double kPi = std::numbers::pi;

MobilityLeg raw_leg(Position origin, double heading, double speed, double start, double end) {
  MobilityLeg leg;
  leg.origin = origin;
  leg.heading = heading;
  leg.speed = speed;
  leg.start = start;
  leg.end = end;
  leg.destination = {origin.x + speed * (end - start) * std::cos(heading),
                     origin.y + speed * (end - start) * std::sin(heading)};
  return leg;
}

TEST(Geometry, Distance) {
  EXPECT_DOUBLE_EQ(distance({0, 0}, {3, 4}), 5.0);
  EXPECT_DOUBLE_EQ(distance({100, 100}, {100, 100}), 0.0);
}

TEST(InitWorld, EmptyPopulationIsJustTheSource) {
  sim::RandomStream s(1);
  const World w = init_world(0, 0.15, 5000.0, s);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w.node(0).role, Role::kSource);
  EXPECT_EQ(w.position(0, 0.0), (Position{2500.0, 2500.0}));
}

TEST(InitWorld, SolverCountFollowsTau) {
  EXPECT_EQ(solver_count(40, 0.3), 12u);
  EXPECT_EQ(solver_count(40, 0.15), 6u);
  EXPECT_EQ(solver_count(10, 0.25), 3u);  // 2.5 rounds up
  EXPECT_EQ(solver_count(10, 0.0), 0u);

  sim::RandomStream s(7);
  const World w = init_world(40, 0.3, 5000.0, s);
  ASSERT_EQ(w.size(), 41u);
  std::size_t solvers = 0;
  for (const auto& n : w.nodes()) {
    if (n.role == Role::kSolver) ++solvers;
    if (n.id != 0) {
      EXPECT_NE(n.role, Role::kSource);
    }
  }
  EXPECT_EQ(solvers, 12u);
}

TEST(InitWorld, SourceIsStationaryForever) {
  sim::RandomStream s(3);
  const World w = init_world(5, 0.2, 5000.0, s);
  EXPECT_TRUE(w.node(0).stationary());
  EXPECT_EQ(w.position(0, 86400.0), (Position{2500.0, 2500.0}));
}

TEST(Mobility, PositionAlongLeg) {
  const Arena arena{5000.0};
  const auto a = raw_leg({0, 0}, 0.0, 2.0, 0.0, 100.0);
  const Position p = position_on(a, arena, 10.0);
  EXPECT_NEAR(p.x, 20.0, 1e-9);
  EXPECT_NEAR(p.y, 0.0, 1e-9);

  const auto b = raw_leg({100, 100}, kPi / 2.0, 1.0, 0.0, 100.0);
  const Position q = position_on(b, arena, 50.0);
  EXPECT_NEAR(q.x, 100.0, 1e-9);
  EXPECT_NEAR(q.y, 150.0, 1e-9);
}

TEST(Mobility, QueryOutsideLegThrows) {
  const Arena arena{5000.0};
  const auto leg = raw_leg({100, 100}, 0.0, 1.0, 10.0, 20.0);
  EXPECT_THROW(position_on(leg, arena, 9.0), std::logic_error);
  EXPECT_THROW(position_on(leg, arena, 21.0), std::logic_error);
}

TEST(Mobility, LegFromCenterHitsWall) {
  const Arena arena{5000.0};
  const auto leg = make_leg({2500, 2500}, 0.0, 0.0, 2.5, arena);
  EXPECT_NEAR(leg.end, 1000.0, 1e-9);
  EXPECT_NEAR(leg.destination.x, 5000.0, 1e-9);
  EXPECT_NEAR(leg.destination.y, 2500.0, 1e-9);
}

TEST(Mobility, CornerStartPointsInward) {
  const Arena arena{5000.0};
  sim::RandomStream s(11);
  for (int i = 0; i < 200; ++i) {
    const auto leg = start_leg({0, 0}, 0.0, arena, s);
    EXPECT_GT(std::cos(leg.heading), 0.0);
    EXPECT_GT(std::sin(leg.heading), 0.0);
    EXPECT_GT(leg.end, 0.0);
  }
  EXPECT_FALSE(points_inward({0, 0}, kPi, arena));
  EXPECT_TRUE(points_inward({0, 0}, kPi / 4.0, arena));
}

TEST(MobilityProperty, LegsStayInsideArena) {
  const Arena arena{5000.0};
  sim::RandomStream s(21);
  for (int i = 0; i < 200; ++i) {
    const Position from{s.uniform(0.0, 5000.0), s.uniform(0.0, 5000.0)};
    const auto leg = start_leg(from, 0.0, arena, s);
    EXPECT_GE(leg.speed, kMinSpeed);
    EXPECT_LE(leg.speed, kMaxSpeed);
    for (int k = 0; k <= 100; ++k) {
      const double t = k == 100 ? leg.end : leg.start + (leg.end - leg.start) * k / 100.0;
      ASSERT_TRUE(arena.contains(position_on(leg, arena, t)));
    }
    EXPECT_EQ(position_on(leg, arena, leg.end), leg.destination);
  }
}

TEST(MobilityProperty, ChainedLegsAreContinuous) {
  sim::RandomStream s(5);
  World w = init_world(10, 0.2, 5000.0, s);
  for (NodeId id = 1; id < w.size(); ++id) {
    for (int k = 0; k < 20; ++k) {
      const MobilityLeg prev = w.node(id).leg;
      const MobilityLeg& next = w.next_leg(id, prev.end, s);
      ASSERT_EQ(next.origin, prev.destination);
      ASSERT_EQ(next.start, prev.end);
      ASSERT_GT(next.end, next.start);
      ASSERT_GE(next.speed, kMinSpeed);
      ASSERT_LE(next.speed, kMaxSpeed);
    }
  }
}

TEST(MobilityProperty, StationaryNodeHasNoNextLeg) {
  sim::RandomStream s(5);
  World w = init_world(2, 0.0, 5000.0, s);
  EXPECT_THROW(w.next_leg(0, 10.0, s), std::logic_error);
}

TEST(InitWorldProperty, PlacementIsUniform) {
  sim::RandomStream s(8);
  const World w = init_world(10000, 0.0, 5000.0, s);
  double sx = 0.0;
  double sy = 0.0;
  for (NodeId id = 1; id < w.size(); ++id) {
    const Position p = w.position(id, 0.0);
    ASSERT_TRUE(w.arena().contains(p));
    sx += p.x;
    sy += p.y;
  }
  EXPECT_NEAR(sx / 10000.0, 2500.0, 0.02 * 5000.0);
  EXPECT_NEAR(sy / 10000.0, 2500.0, 0.02 * 5000.0);
}

}  // namespace
}  // namespace locate::world
