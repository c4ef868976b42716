#pragma once

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

#include "cnav/geometry.hpp"
#include "cnav/rewards.hpp"
#include "cnav/rng.hpp"

namespace cnav {

struct EpisodeConfig {
  int max_steps = 7000;       // 400 for evaluation
  double goal_radius = 0.1;   // meters
  double robot_radius = 0.1;  // meters
  std::uint64_t rng_seed = 0;
};

struct StepOutcome {
  Observation next_observation;
  TerminalKind terminal_kind = TerminalKind::None;
  Pose next_pose;
};

struct SamplingExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kGridCell = 0.05;       // occupancy cell size, meters
inline constexpr int kMaxSampleTries = 10000;

// Occupancy rasterization of a map at 0.05 m resolution with 4-neighbor
// connected-component labels. A cell is free when its center keeps at least
// `clearance` distance from every wall. Built once per map and shared.
class ConnectivityGrid {
 public:
  ConnectivityGrid(const MapSpec& map, double clearance)
      : nx_(static_cast<int>(std::ceil(map.width / kGridCell))),
        ny_(static_cast<int>(std::ceil(map.height / kGridCell))),
        label_(static_cast<std::size_t>(nx_) * ny_, -1) {
    std::vector<char> free_cell(label_.size(), 0);
    for (int j = 0; j < ny_; ++j) {
      for (int i = 0; i < nx_; ++i) {
        const double cx = (i + 0.5) * kGridCell;
        const double cy = (j + 0.5) * kGridCell;
        if (cx >= map.width || cy >= map.height) continue;
        bool ok = true;
        for (const Segment& s : map.segments) {
          if (point_segment_distance(cx, cy, s) <= clearance) {
            ok = false;
            break;
          }
        }
        free_cell[idx(i, j)] = ok;
      }
    }
    // Flood fill 4-neighbor components.
    int next_label = 0;
    std::deque<std::pair<int, int>> queue;
    for (int j = 0; j < ny_; ++j) {
      for (int i = 0; i < nx_; ++i) {
        if (!free_cell[idx(i, j)] || label_[idx(i, j)] >= 0) continue;
        const int lab = next_label++;
        label_[idx(i, j)] = lab;
        queue.push_back({i, j});
        while (!queue.empty()) {
          auto [ci, cj] = queue.front();
          queue.pop_front();
          const int di[4] = {1, -1, 0, 0};
          const int dj[4] = {0, 0, 1, -1};
          for (int k = 0; k < 4; ++k) {
            const int ni = ci + di[k];
            const int nj = cj + dj[k];
            if (ni < 0 || nj < 0 || ni >= nx_ || nj >= ny_) continue;
            if (!free_cell[idx(ni, nj)] || label_[idx(ni, nj)] >= 0) continue;
            label_[idx(ni, nj)] = lab;
            queue.push_back({ni, nj});
          }
        }
      }
    }
    components_ = next_label;
  }

  int label_at(double x, double y) const {
    const int i = static_cast<int>(x / kGridCell);
    const int j = static_cast<int>(y / kGridCell);
    if (i < 0 || j < 0 || i >= nx_ || j >= ny_) return -1;
    return label_[idx(i, j)];
  }

  bool connected(double ax, double ay, double bx, double by) const {
    const int la = label_at(ax, ay);
    return la >= 0 && la == label_at(bx, by);
  }

  int components() const { return components_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(j) * nx_ + i;
  }
  int nx_, ny_;
  std::vector<int> label_;
  int components_ = 0;
};

inline bool clear_of_walls(const MapSpec& map, double x, double y,
                           double clearance) {
  if (x <= 0.0 || x >= map.width || y <= 0.0 || y >= map.height) return false;
  for (const Segment& s : map.segments) {
    if (point_segment_distance(x, y, s) < clearance) return false;
  }
  return true;
}

// Draws a start pose and a goal point that are collision-free, grid-connected
// (so a collision-free path exists) and further apart than the goal radius.
// Start heading is uniform in (-pi, pi].
inline std::pair<Pose, Point> sample_episode(const MapSpec& map,
                                             const ConnectivityGrid& grid,
                                             RngStream& rng,
                                             const EpisodeConfig& cfg) {
  const double clearance = std::max(cfg.robot_radius, map.spawn_clearance);
  const auto draw_point = [&](Point& out) -> bool {
    out.x = rng.uniform(0.0, map.width);
    out.y = rng.uniform(0.0, map.height);
    return clear_of_walls(map, out.x, out.y, clearance) &&
           grid.label_at(out.x, out.y) >= 0;
  };
  for (int attempt = 0; attempt < kMaxSampleTries; ++attempt) {
    Point start, goal;
    if (!draw_point(start)) continue;
    if (!draw_point(goal)) continue;
    if (distance(start.x, start.y, goal.x, goal.y) <= cfg.goal_radius) continue;
    if (!grid.connected(start.x, start.y, goal.x, goal.y)) continue;
    Pose pose;
    pose.x = start.x;
    pose.y = start.y;
    pose.omega = wrap_pi(rng.uniform(-M_PI, M_PI));
    return {pose, goal};
  }
  throw SamplingExhaustedError(map.name +
                               ": no connected start/goal pair found after " +
                               std::to_string(kMaxSampleTries) + " tries");
}

// Convenience overload for one-off sampling; builds the grid ad hoc.
inline std::pair<Pose, Point> sample_episode(const MapSpec& map, RngStream& rng,
                                             const EpisodeConfig& cfg) {
  ConnectivityGrid grid(map, cfg.robot_radius);
  return sample_episode(map, grid, rng, cfg);
}

// Episode state machine. One instance is owned by exactly one worker; the
// referenced MapSpec and ConnectivityGrid are shared read-only.
class Env {
 public:
  Env(const MapSpec& map, const ConnectivityGrid& grid,
      const EpisodeConfig& cfg, const RewardParams& rewards)
      : map_(&map), grid_(&grid), cfg_(cfg), rewards_(rewards) {}

  // Starts a fresh episode with a sampled start/goal pair.
  Observation reset(RngStream& rng) {
    auto [pose, goal] = sample_episode(*map_, *grid_, rng, cfg_);
    return reset_to(pose, goal);
  }

  // Starts a fresh episode from a fixed start/goal (evaluation suites).
  Observation reset_to(const Pose& pose, Point goal) {
    pose_ = pose;
    goal_ = goal;
    steps_ = 0;
    terminal_ = TerminalKind::None;
    path_length_ = 0.0;
    return observe();
  }

  std::pair<StepOutcome, double> step(Action action) {
    if (terminal_ != TerminalKind::None) {
      throw std::logic_error("Env::step called on a terminal episode");
    }
    const Pose prev = pose_;
    pose_ = apply_action(pose_, action);
    path_length_ += distance(prev.x, prev.y, pose_.x, pose_.y);
    ++steps_;
    if (distance(pose_.x, pose_.y, goal_.x, goal_.y) <= cfg_.goal_radius) {
      terminal_ = TerminalKind::ReachedGoal;
    } else if (check_collision(*map_, pose_, cfg_.robot_radius)) {
      terminal_ = TerminalKind::Collision;
    } else if (steps_ >= cfg_.max_steps) {
      terminal_ = TerminalKind::TimeLimit;
    }
    StepOutcome out;
    out.terminal_kind = terminal_;
    out.next_pose = pose_;
    out.next_observation = observe();
    const double reward =
        extrinsic_reward(prev, pose_, goal_, terminal_, rewards_);
    return {out, reward};
  }

  Observation observe() const {
    return Observation{scan(*map_, pose_), goal_observation(pose_, goal_)};
  }

  const Pose& pose() const { return pose_; }
  Point goal() const { return goal_; }
  int steps() const { return steps_; }
  TerminalKind terminal() const { return terminal_; }
  bool done() const { return terminal_ != TerminalKind::None; }
  double path_length() const { return path_length_; }
  const MapSpec& map() const { return *map_; }
  const EpisodeConfig& config() const { return cfg_; }

 private:
  const MapSpec* map_;
  const ConnectivityGrid* grid_;
  EpisodeConfig cfg_;
  RewardParams rewards_;
  Pose pose_;
  Point goal_;
  int steps_ = 0;
  TerminalKind terminal_ = TerminalKind::None;
  double path_length_ = 0.0;
};

}  // namespace cnav
