#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace cnav {

inline constexpr int kLaserBeams = 72;
inline constexpr double kLaserMaxRange = 7.0;  // meters
inline constexpr double kForwardStep = 0.06;   // meters
inline constexpr double kTurnStep = 8.0 * M_PI / 180.0;  // radians

// Wrap an angle into (-pi, pi].
inline double wrap_pi(double a) {
  if (a > M_PI || a <= -M_PI) {
    a = std::remainder(a, 2.0 * M_PI);  // lands in [-pi, pi]
    if (a <= -M_PI) a += 2.0 * M_PI;
  }
  return a;
}

namespace detail {
// Error-free sum: s = fl(a+b), e the exact residual (Knuth two-sum).
inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double bv = s - a;
  e = (a - (s - bv)) + (b - bv);
}
}  // namespace detail

// Robot pose. Heading is kept in (-pi, pi]. Turn actions accumulate the
// heading in compensated arithmetic (omega plus a residual term) so that a
// TurnLeft followed by a TurnRight restores omega bit-exactly; omega_c holds
// the sub-ulp residual and is zero for freshly constructed poses.
struct Pose {
  double x = 0.0;
  double y = 0.0;
  double omega = 0.0;
  double omega_c = 0.0;

  bool operator==(const Pose& o) const {
    return x == o.x && y == o.y && omega == o.omega;
  }
};

// Adds delta radians to the pose heading, wrapping into (-pi, pi].
inline void turn(Pose& p, double delta) {
  double s, e;
  detail::two_sum(p.omega, delta, s, e);
  double lo = e + p.omega_c;
  if (s > M_PI) {
    double s2, e2;
    detail::two_sum(s, -2.0 * M_PI, s2, e2);
    s = s2;
    lo += e2;
  } else if (s <= -M_PI) {
    double s2, e2;
    detail::two_sum(s, 2.0 * M_PI, s2, e2);
    s = s2;
    lo += e2;
  }
  detail::two_sum(s, lo, p.omega, p.omega_c);
  // Renormalization can nudge the head past the boundary by one ulp.
  if (p.omega > M_PI || p.omega <= -M_PI) {
    const double shift = p.omega > M_PI ? -2.0 * M_PI : 2.0 * M_PI;
    double s2, e2;
    detail::two_sum(p.omega, shift, s2, e2);
    detail::two_sum(s2, e2 + p.omega_c, p.omega, p.omega_c);
  }
}

struct Segment {
  double x1, y1, x2, y2;
};

// Wall-segment floorplan. Immutable after load; safe to share read-only.
struct MapSpec {
  std::string name;
  double width = 0.0;
  double height = 0.0;
  std::vector<Segment> segments;
  double spawn_clearance = 0.15;  // meters; extra margin for episode sampling

  double diagonal() const { return std::sqrt(width * width + height * height); }
};

// 72-beam range scan, every entry clipped to [0, kLaserMaxRange].
struct LaserScan {
  std::array<double, kLaserBeams> ranges{};
};

// Goal as seen from the robot: Euclidean distance plus sin/cos of the goal
// bearing in the robot's local frame.
struct GoalObservation {
  double distance = 0.0;
  double sin_rel = 0.0;
  double cos_rel = 1.0;
};

struct Observation {
  LaserScan scan;
  GoalObservation goal;
};

enum class Action : int { Forward = 0, TurnLeft = 1, TurnRight = 2 };
inline constexpr int kActionCount = 3;

enum class TerminalKind { None, ReachedGoal, Collision, TimeLimit };

inline const char* terminal_kind_name(TerminalKind k) {
  switch (k) {
    case TerminalKind::None: return "none";
    case TerminalKind::ReachedGoal: return "goal";
    case TerminalKind::Collision: return "collision";
    case TerminalKind::TimeLimit: return "timeout";
  }
  return "?";
}

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(double ax, double ay, double bx, double by) {
  const double dx = ax - bx;
  const double dy = ay - by;
  return std::sqrt(dx * dx + dy * dy);
}

// Distance from point (px,py) to segment s.
inline double point_segment_distance(double px, double py, const Segment& s) {
  const double vx = s.x2 - s.x1;
  const double vy = s.y2 - s.y1;
  const double wx = px - s.x1;
  const double wy = py - s.y1;
  const double vv = vx * vx + vy * vy;
  double t = vv > 0.0 ? (wx * vx + wy * vy) / vv : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(px, py, s.x1 + t * vx, s.y1 + t * vy);
}

// Distance from ray (ox,oy)+(dx,dy)*t to segment, or +inf when the ray
// misses. Direction must be unit length for the result to be in meters.
inline double ray_segment_distance(double ox, double oy, double dx, double dy,
                                   const Segment& s) {
  const double sx = s.x2 - s.x1;
  const double sy = s.y2 - s.y1;
  const double denom = dx * sy - dy * sx;
  if (std::abs(denom) < 1e-15) return std::numeric_limits<double>::infinity();
  const double qx = s.x1 - ox;
  const double qy = s.y1 - oy;
  const double t = (qx * sy - qy * sx) / denom;  // along the ray
  const double u = (qx * dy - qy * dx) / denom;  // along the segment
  if (t < 0.0 || u < 0.0 || u > 1.0) {
    return std::numeric_limits<double>::infinity();
  }
  return t;
}

// Direction of beam `beam_index` relative to the robot heading. Beam 0 points
// backwards (omega - pi); beams advance counterclockwise in 5 degree steps,
// covering a full 360 degree fan.
inline double beam_angle(const Pose& pose, int beam_index) {
  return pose.omega + (-M_PI + beam_index * (2.0 * M_PI / kLaserBeams));
}

// Distance from the pose to the nearest wall along one beam, clipped to the
// sensor's maximum range.
inline double raycast(const MapSpec& map, const Pose& origin, int beam_index) {
  const double a = beam_angle(origin, beam_index);
  const double dx = std::cos(a);
  const double dy = std::sin(a);
  double best = kLaserMaxRange;
  for (const Segment& s : map.segments) {
    const double t = ray_segment_distance(origin.x, origin.y, dx, dy, s);
    if (t < best) best = t;
  }
  return best;
}

inline LaserScan scan(const MapSpec& map, const Pose& pose) {
  LaserScan out;
  for (int k = 0; k < kLaserBeams; ++k) out.ranges[k] = raycast(map, pose, k);
  return out;
}

// Discrete kinematics: advance 0.06 m along the heading, or turn +-8 degrees.
inline Pose apply_action(const Pose& pose, Action action) {
  Pose next = pose;
  switch (action) {
    case Action::Forward:
      next.x = pose.x + kForwardStep * std::cos(pose.omega);
      next.y = pose.y + kForwardStep * std::sin(pose.omega);
      break;
    case Action::TurnLeft:
      turn(next, kTurnStep);
      break;
    case Action::TurnRight:
      turn(next, -kTurnStep);
      break;
  }
  return next;
}

// True iff the robot disk (strictly) penetrates a wall or its center left the
// map bounds. The boundary case (distance exactly equal to the radius) does
// not collide.
inline bool check_collision(const MapSpec& map, const Pose& pose,
                            double robot_radius) {
  if (pose.x < 0.0 || pose.x > map.width || pose.y < 0.0 ||
      pose.y > map.height) {
    return true;
  }
  for (const Segment& s : map.segments) {
    if (point_segment_distance(pose.x, pose.y, s) < robot_radius) return true;
  }
  return false;
}

inline GoalObservation goal_observation(const Pose& pose, Point goal) {
  GoalObservation out;
  out.distance = distance(pose.x, pose.y, goal.x, goal.y);
  const double bearing =
      wrap_pi(std::atan2(goal.y - pose.y, goal.x - pose.x) - pose.omega);
  out.sin_rel = std::sin(bearing);
  out.cos_rel = std::cos(bearing);
  return out;
}

}  // namespace cnav
