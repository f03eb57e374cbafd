#pragma once

#include "racebench/grid_map.hpp"
#include "racebench/messages.hpp"

namespace racebench {

struct SimConfig {
  double dt{0.01};
  int lidar_beams{1081};
  double lidar_fov{4.71238898038469};  // 270 deg
  double lidar_max_range{12.0};
  unsigned seed{0};

  void validate() const;
};

// Distance along a single ray (world-frame angle) to the first blocked cell
// boundary, traversed with a DDA grid walk. Returns kNoReturn when nothing
// is hit within max_range or the ray leaves the map.
double cast_ray(const GridMap& map, double ox, double oy, double angle, double max_range);

// Full scan: lidar_beams rays evenly spanning lidar_fov centered on the pose
// yaw. The OpenMP variant computes beams in parallel; every beam is
// independent, so the result is bit-identical to the serial reference.
Scan raycast_scan(const GridMap& map, const Pose2D& pose, const SimConfig& config, double t = 0.0);
Scan raycast_scan_serial(const GridMap& map, const Pose2D& pose, const SimConfig& config,
                         double t = 0.0);

// True iff any blocked cell center lies within footprint_radius of the pose
// position. Unknown cells count as blocked.
bool check_collision(const GridMap& map, const Pose2D& pose, double footprint_radius);

}  // namespace racebench
