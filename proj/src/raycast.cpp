#include "racebench/raycast.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "racebench/errors.hpp"

namespace racebench {

void SimConfig::validate() const {
  if (dt <= 0.0) throw std::invalid_argument("sim dt must be positive");
  if (lidar_beams < 2) throw std::invalid_argument("lidar_beams must be at least 2");
  if (lidar_fov <= 0.0) throw std::invalid_argument("lidar_fov must be positive");
  if (lidar_max_range <= 0.0) throw std::invalid_argument("lidar_max_range must be positive");
}

double cast_ray(const GridMap& map, double ox, double oy, double angle, double max_range) {
  const double res = map.resolution();
  const Vec2 p = map.world_to_map({ox, oy});
  const double map_angle = angle - map.origin().yaw;
  const double dx = std::cos(map_angle);
  const double dy = std::sin(map_angle);

  int ix = static_cast<int>(std::floor(p.x / res));
  int iy = static_cast<int>(std::floor(p.y / res));
  if (!map.cell_in_bounds(ix, iy)) return kNoReturn;
  if (map.blocked(ix, iy)) return 0.0;

  constexpr double kInf = std::numeric_limits<double>::infinity();
  const int step_x = dx > 0.0 ? 1 : (dx < 0.0 ? -1 : 0);
  const int step_y = dy > 0.0 ? 1 : (dy < 0.0 ? -1 : 0);
  const double t_delta_x = step_x != 0 ? res / std::abs(dx) : kInf;
  const double t_delta_y = step_y != 0 ? res / std::abs(dy) : kInf;

  double t_max_x = kInf;
  if (step_x > 0) {
    t_max_x = ((ix + 1) * res - p.x) / dx;
  } else if (step_x < 0) {
    t_max_x = (ix * res - p.x) / dx;
  }
  double t_max_y = kInf;
  if (step_y > 0) {
    t_max_y = ((iy + 1) * res - p.y) / dy;
  } else if (step_y < 0) {
    t_max_y = (iy * res - p.y) / dy;
  }

  while (true) {
    double t_entry;
    if (t_max_x < t_max_y) {
      ix += step_x;
      t_entry = t_max_x;
      t_max_x += t_delta_x;
    } else {
      iy += step_y;
      t_entry = t_max_y;
      t_max_y += t_delta_y;
    }
    if (t_entry > max_range) return kNoReturn;
    if (!map.cell_in_bounds(ix, iy)) return kNoReturn;
    if (map.blocked(ix, iy)) return t_entry;
  }
}

namespace {

Scan make_scan_frame(const Pose2D& pose, const SimConfig& config, double t) {
  Scan scan;
  scan.t = t;
  scan.angle_increment = config.lidar_fov / (config.lidar_beams - 1);
  scan.angle_min = -config.lidar_fov / 2.0;
  scan.angle_max = scan.angle_min + scan.angle_increment * (config.lidar_beams - 1);
  scan.range_min = 0.0;
  scan.range_max = config.lidar_max_range;
  scan.ranges.resize(static_cast<std::size_t>(config.lidar_beams));
  (void)pose;
  return scan;
}

void require_in_bounds(const GridMap& map, const Pose2D& pose) {
  if (!map.world_in_bounds(pose.x, pose.y)) {
    throw PoseOutOfBounds("pose (" + std::to_string(pose.x) + ", " + std::to_string(pose.y) +
                          ") is outside the map");
  }
}

}  // namespace

Scan raycast_scan(const GridMap& map, const Pose2D& pose, const SimConfig& config, double t) {
  config.validate();
  require_in_bounds(map, pose);
  Scan scan = make_scan_frame(pose, config, t);
  const int beams = config.lidar_beams;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < beams; ++i) {
    const double angle = pose.yaw + scan.angle_min + i * scan.angle_increment;
    scan.ranges[static_cast<std::size_t>(i)] =
        cast_ray(map, pose.x, pose.y, angle, config.lidar_max_range);
  }
  return scan;
}

Scan raycast_scan_serial(const GridMap& map, const Pose2D& pose, const SimConfig& config,
                         double t) {
  config.validate();
  require_in_bounds(map, pose);
  Scan scan = make_scan_frame(pose, config, t);
  for (int i = 0; i < config.lidar_beams; ++i) {
    const double angle = pose.yaw + scan.angle_min + i * scan.angle_increment;
    scan.ranges[static_cast<std::size_t>(i)] =
        cast_ray(map, pose.x, pose.y, angle, config.lidar_max_range);
  }
  return scan;
}

bool check_collision(const GridMap& map, const Pose2D& pose, double footprint_radius) {
  if (footprint_radius < 0.0) {
    throw std::invalid_argument("footprint_radius must be non-negative");
  }
  require_in_bounds(map, pose);

  const double res = map.resolution();
  const Vec2 p = map.world_to_map({pose.x, pose.y});
  const int ix_lo = std::max(0, static_cast<int>(std::floor((p.x - footprint_radius) / res)));
  const int ix_hi = std::min(map.width() - 1,
                             static_cast<int>(std::floor((p.x + footprint_radius) / res)));
  const int iy_lo = std::max(0, static_cast<int>(std::floor((p.y - footprint_radius) / res)));
  const int iy_hi = std::min(map.height() - 1,
                             static_cast<int>(std::floor((p.y + footprint_radius) / res)));

  const double r2 = footprint_radius * footprint_radius;
  for (int iy = iy_lo; iy <= iy_hi; ++iy) {
    for (int ix = ix_lo; ix <= ix_hi; ++ix) {
      if (!map.blocked(ix, iy)) continue;
      const double cx = (ix + 0.5) * res - p.x;
      const double cy = (iy + 0.5) * res - p.y;
      if (cx * cx + cy * cy <= r2) return true;
    }
  }
  return false;
}

}  // namespace racebench
