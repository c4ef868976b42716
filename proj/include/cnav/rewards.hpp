#pragma once

#include <cmath>

#include "cnav/geometry.hpp"

namespace cnav {

// Every extrinsic-reward constant in one place. Defaults are the trained
// values; all of them can be overridden from the run config.
struct RewardParams {
  double lambda_p = 1.0;
  double lambda_omega = 1.0 / (200.0 * M_PI);
  double lambda_g = 0.15;
  double r_reach = 1.0;
  double r_collision = -5.0;
  double r_position = -0.05;
  double lambda_i = 1.0;  // intrinsic reward scale, used by the trainer
};

// Main task term: goal bonus, collision penalty, otherwise the per-step
// progress toward the goal scaled by lambda_g. Time-limit steps take the
// progress branch (the limit is a training artifact, not a world event).
inline double main_task_reward(const Pose& prev_pose, const Pose& pose,
                               Point goal, TerminalKind terminal_kind,
                               const RewardParams& params) {
  if (terminal_kind == TerminalKind::ReachedGoal) return params.r_reach;
  if (terminal_kind == TerminalKind::Collision) return params.r_collision;
  return params.lambda_g * (distance(prev_pose.x, prev_pose.y, goal.x, goal.y) -
                            distance(pose.x, pose.y, goal.x, goal.y));
}

// Penalty for not moving. Turn actions leave the position bit-identical, so
// exact zero-displacement is the intended test.
inline double position_penalty(const Pose& prev_pose, const Pose& pose,
                               const RewardParams& params) {
  const double moved =
      distance(prev_pose.x, prev_pose.y, pose.x, pose.y);
  return moved == 0.0 ? params.r_position : 0.0;
}

// Penalty for heading misalignment: negative wrapped absolute heading error
// toward the goal, in [-pi, 0].
inline double orientation_penalty(const Pose& pose, Point goal) {
  return -std::fabs(
      wrap_pi(std::atan2(goal.y - pose.y, goal.x - pose.x) - pose.omega));
}

inline double extrinsic_reward(const Pose& prev_pose, const Pose& pose,
                               Point goal, TerminalKind terminal_kind,
                               const RewardParams& params) {
  return main_task_reward(prev_pose, pose, goal, terminal_kind, params) +
         params.lambda_p * position_penalty(prev_pose, pose, params) +
         params.lambda_omega * orientation_penalty(pose, goal);
}

}  // namespace cnav
