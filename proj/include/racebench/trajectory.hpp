#pragma once

#include <cmath>
#include <vector>

#include "racebench/geometry.hpp"

namespace racebench {

// Unit quaternion stored (w, x, y, z).
struct Quat {
  double w{1.0};
  double x{0.0};
  double y{0.0};
  double z{0.0};

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

  Quat normalized() const {
    const double n = norm();
    return {w / n, x / n, y / n, z / n};
  }
};

inline Quat yaw_to_quat(double yaw) {
  return {std::cos(yaw / 2.0), 0.0, 0.0, std::sin(yaw / 2.0)};
}

inline double quat_to_yaw(const Quat& q) {
  return std::atan2(2.0 * (q.w * q.z + q.x * q.y), 1.0 - 2.0 * (q.y * q.y + q.z * q.z));
}

struct TrajSample {
  double t{0.0};
  double x{0.0};
  double y{0.0};
  double z{0.0};
  Quat q;

  double yaw() const { return quat_to_yaw(q); }
  Pose2D pose2d() const { return Pose2D(x, y, yaw()); }
};

// Timestamped pose sequence. When has_time is false the t fields hold the
// sample index (KITTI-style input) and association falls back to indices.
struct Trajectory {
  std::vector<TrajSample> samples;
  bool has_time{true};

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
};

inline Trajectory trajectory_from_poses(const std::vector<StampedPose>& poses) {
  Trajectory traj;
  traj.samples.reserve(poses.size());
  for (const auto& sp : poses) {
    traj.samples.push_back({sp.t, sp.pose.x, sp.pose.y, 0.0, yaw_to_quat(sp.pose.yaw)});
  }
  return traj;
}

}  // namespace racebench
