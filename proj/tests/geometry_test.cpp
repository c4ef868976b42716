#include "cnav/geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "cnav/rng.hpp"

namespace cnav {
namespace {

MapSpec empty_room(double w, double h) {
  MapSpec map;
  map.name = "room";
  map.width = w;
  map.height = h;
  map.segments = {{0, 0, w, 0}, {w, 0, w, h}, {w, h, 0, h}, {0, h, 0, 0}};
  return map;
}

TEST(WrapPi, Basics) {
  EXPECT_DOUBLE_EQ(wrap_pi(0.0), 0.0);
  EXPECT_DOUBLE_EQ(wrap_pi(M_PI), M_PI);
  EXPECT_DOUBLE_EQ(wrap_pi(-M_PI), M_PI);
  EXPECT_NEAR(wrap_pi(3 * M_PI / 2), -M_PI / 2, 1e-12);
  EXPECT_NEAR(wrap_pi(-3 * M_PI / 2), M_PI / 2, 1e-12);
  EXPECT_NEAR(wrap_pi(7 * M_PI), M_PI, 1e-9);
}

TEST(Raycast, EmptyRoomAlongX) {
  const MapSpec map = empty_room(5.33, 3.76);
  Pose pose{1.0, 1.88, 0.0};
  // Beam 36 points along the heading (+x); distance to the x=5.33 wall.
  EXPECT_NEAR(raycast(map, pose, 36), 4.33, 1e-9);
  // Beam 0 points backwards (-x).
  EXPECT_NEAR(raycast(map, pose, 0), 1.0, 1e-9);
  // Beam 18 points at omega - pi/2 = -y.
  EXPECT_NEAR(raycast(map, pose, 18), 1.88, 1e-9);
}

TEST(Raycast, PerpendicularWall) {
  const MapSpec map = empty_room(4.0, 4.0);
  Pose pose{0.5, 2.0, M_PI};  // facing the x=0 wall
  EXPECT_NEAR(raycast(map, pose, 36), 0.5, 1e-12);
}

TEST(Raycast, ClipsAtMaxRange) {
  const MapSpec map = empty_room(10.0, 2.0);
  Pose pose{0.5, 1.0, 0.0};  // nearest wall along +x is 9.5 m away
  EXPECT_DOUBLE_EQ(raycast(map, pose, 36), 7.0);
}

TEST(Scan, CenterOfSquareRoomSymmetry) {
  const MapSpec map = empty_room(4.0, 4.0);
  Pose pose{2.0, 2.0, 0.37};
  const LaserScan s = scan(map, pose);
  double min_range = kLaserMaxRange;
  for (double r : s.ranges) {
    EXPECT_LE(r, kLaserMaxRange);
    EXPECT_GE(r, 0.0);
    min_range = std::min(min_range, r);
  }
  EXPECT_NEAR(min_range, 2.0, 1e-9);
}

TEST(Scan, NearCornerMinIsNearestWall) {
  const MapSpec map = empty_room(5.33, 3.76);
  Pose pose{0.3, 0.4, 0.0};  // beam 0 points at -x and hits the nearest wall
  const LaserScan s = scan(map, pose);
  double min_range = kLaserMaxRange;
  for (double r : s.ranges) min_range = std::min(min_range, r);
  EXPECT_NEAR(min_range, 0.3, 1e-12);
  EXPECT_NEAR(s.ranges[0], 0.3, 1e-12);
}

TEST(Scan, NeverExceedsFarCornerDistance) {
  MapSpec map = empty_room(5.33, 3.76);
  map.segments.push_back({1.8, 0.0, 1.8, 2.0});
  RngStream rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Pose pose{rng.uniform(0.1, 5.2), rng.uniform(0.1, 3.6),
              rng.uniform(-M_PI, M_PI)};
    double far_corner = 0.0;
    for (double cx : {0.0, map.width}) {
      for (double cy : {0.0, map.height}) {
        far_corner = std::max(far_corner, distance(pose.x, pose.y, cx, cy));
      }
    }
    const LaserScan s = scan(map, pose);
    for (double r : s.ranges) EXPECT_LE(r, far_corner + 1e-9);
  }
}

TEST(ApplyAction, ForwardAlongHeading) {
  const Pose p = apply_action(Pose{0, 0, 0}, Action::Forward);
  EXPECT_DOUBLE_EQ(p.x, 0.06);
  EXPECT_DOUBLE_EQ(p.y, 0.0);
  EXPECT_DOUBLE_EQ(p.omega, 0.0);
}

TEST(ApplyAction, TurnLeftEightDegrees) {
  const Pose p = apply_action(Pose{0, 0, 0}, Action::TurnLeft);
  EXPECT_DOUBLE_EQ(p.omega, 8.0 * M_PI / 180.0);
  EXPECT_NEAR(p.omega, 0.13963, 1e-5);
}

TEST(ApplyAction, FullRotationReturnsHeading) {
  Pose p{1.0, 1.0, M_PI};
  for (int i = 0; i < 45; ++i) p = apply_action(p, Action::TurnLeft);
  // 45 * 8 deg = 360 deg; allow the wrap to land on either side of +-pi.
  EXPECT_NEAR(std::fabs(wrap_pi(p.omega - M_PI)), 0.0, 1e-9);
  EXPECT_DOUBLE_EQ(p.x, 1.0);
  EXPECT_DOUBLE_EQ(p.y, 1.0);
}

TEST(ApplyAction, TurnPairRestoresPoseBitExactly) {
  RngStream rng(99);
  for (int trial = 0; trial < 100000; ++trial) {
    Pose p{rng.uniform(-3, 3), rng.uniform(-3, 3),
           wrap_pi(rng.uniform(-M_PI, M_PI))};
    const Pose lr = apply_action(apply_action(p, Action::TurnLeft),
                                 Action::TurnRight);
    ASSERT_EQ(lr, p);
    const Pose rl = apply_action(apply_action(p, Action::TurnRight),
                                 Action::TurnLeft);
    ASSERT_EQ(rl, p);
  }
  // Edge headings.
  for (double omega : {0.0, M_PI, 1e-9, -1e-9, 0.07, -0.07, 3.0, -3.0}) {
    Pose p{0, 0, omega};
    EXPECT_EQ(apply_action(apply_action(p, Action::TurnLeft),
                           Action::TurnRight),
              p);
  }
}

TEST(ApplyAction, DeepTurnSequenceReversesBitExactly) {
  RngStream rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    Pose p{0, 0, wrap_pi(rng.uniform(-M_PI, M_PI))};
    Pose q = p;
    int seq[64];
    for (int i = 0; i < 64; ++i) {
      seq[i] = rng.uniform01() < 0.5 ? 1 : -1;
      q = apply_action(q, seq[i] > 0 ? Action::TurnLeft : Action::TurnRight);
    }
    for (int i = 63; i >= 0; --i) {
      q = apply_action(q, seq[i] > 0 ? Action::TurnRight : Action::TurnLeft);
    }
    ASSERT_EQ(q, p);
  }
}

TEST(ApplyAction, HeadingStaysWrapped) {
  RngStream rng(3);
  Pose p{0, 0, 0};
  for (int i = 0; i < 10000; ++i) {
    p = apply_action(p, rng.uniform01() < 0.5 ? Action::TurnLeft
                                              : Action::TurnRight);
    ASSERT_GT(p.omega, -M_PI);
    ASSERT_LE(p.omega, M_PI);
  }
}

TEST(CheckCollision, PenetrationAndClearCases) {
  const MapSpec map = empty_room(4.0, 4.0);
  EXPECT_TRUE(check_collision(map, Pose{0.05, 2.0, 0}, 0.1));
  EXPECT_FALSE(check_collision(map, Pose{2.0, 2.0, 0}, 0.1));
  EXPECT_TRUE(check_collision(map, Pose{-0.5, 2.0, 0}, 0.1));  // out of bounds
}

TEST(CheckCollision, ExactRadiusDoesNotCollide) {
  const MapSpec map = empty_room(4.0, 4.0);
  EXPECT_FALSE(check_collision(map, Pose{0.1, 2.0, 0}, 0.1));
}

TEST(GoalObservation, DeadAhead) {
  const GoalObservation g = goal_observation(Pose{0, 0, 0}, Point{1, 0});
  EXPECT_DOUBLE_EQ(g.distance, 1.0);
  EXPECT_DOUBLE_EQ(g.sin_rel, 0.0);
  EXPECT_DOUBLE_EQ(g.cos_rel, 1.0);
}

TEST(GoalObservation, NinetyDegreesLeft) {
  const GoalObservation g = goal_observation(Pose{0, 0, 0}, Point{0, 1});
  EXPECT_DOUBLE_EQ(g.distance, 1.0);
  EXPECT_NEAR(g.sin_rel, 1.0, 1e-12);
  EXPECT_NEAR(g.cos_rel, 0.0, 1e-12);
}

TEST(GoalObservation, HeadingCancelsBearing) {
  const GoalObservation g = goal_observation(Pose{0, 0, M_PI / 2}, Point{0, 1});
  EXPECT_DOUBLE_EQ(g.distance, 1.0);
  EXPECT_NEAR(g.sin_rel, 0.0, 1e-12);
  EXPECT_NEAR(g.cos_rel, 1.0, 1e-12);
}

TEST(GoalObservation, UnitCircleInvariant) {
  RngStream rng(5);
  for (int i = 0; i < 1000; ++i) {
    Pose p{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-M_PI, M_PI)};
    Point g{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const GoalObservation obs = goal_observation(p, g);
    EXPECT_NEAR(obs.sin_rel * obs.sin_rel + obs.cos_rel * obs.cos_rel, 1.0,
                1e-9);
    EXPECT_GE(obs.distance, 0.0);
  }
}

}  // namespace
}  // namespace cnav
