#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "racebench/geometry.hpp"

namespace racebench {

inline constexpr double kNoReturn = std::numeric_limits<double>::infinity();

// Planar laser scan. Angles are in the sensor frame; beam i points at
// angle_min + i * angle_increment. Beams with no return within range_max
// carry kNoReturn rather than a clamped range.
struct Scan {
  double t{0.0};
  double angle_min{0.0};
  double angle_max{0.0};
  double angle_increment{0.0};
  double range_min{0.0};
  double range_max{0.0};
  std::vector<double> ranges;

  double beam_angle(std::size_t i) const { return angle_min + static_cast<double>(i) * angle_increment; }

  bool size_consistent() const {
    if (angle_increment <= 0.0) return ranges.size() <= 1;
    const std::size_t expected =
        static_cast<std::size_t>(std::floor((angle_max - angle_min) / angle_increment + 1e-9)) + 1;
    return ranges.size() == expected;
  }
};

struct OdomSample {
  double t{0.0};
  Pose2D pose;
  double v_linear{0.0};
  double v_angular{0.0};
};

struct DriveCommand {
  double t{0.0};
  double speed{0.0};
  double steering_angle{0.0};
};

// Namespaced topic name. Full form is "<namespace>/<base>"; an empty
// namespace yields "/<base>".
struct TopicName {
  std::string ns;
  std::string base;

  TopicName(std::string ns_, std::string base_) : ns(std::move(ns_)), base(std::move(base_)) {}
  explicit TopicName(std::string base_) : base(std::move(base_)) {}

  std::string full() const {
    std::string out = ns;
    if (out.empty() || out.back() != '/') out += '/';
    out += base;
    return out;
  }

  static bool valid(const std::string& full_name) {
    if (full_name.empty() || full_name.front() != '/') return false;
    char prev = 0;
    for (char c : full_name) {
      const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '/';
      if (!ok) return false;
      if (c == '/' && prev == '/') return false;
      prev = c;
    }
    return full_name.back() != '/';
  }
};

// Preprocessing-stage range filter: NaN becomes a no-return, finite values
// are clamped into [range_min, range_max]. The no-return sentinel is kept
// as-is so reactive consumers can still see open space.
inline Scan filter_scan(Scan scan) {
  for (double& r : scan.ranges) {
    if (std::isnan(r)) {
      r = kNoReturn;
    } else if (r != kNoReturn) {
      if (r < scan.range_min) r = scan.range_min;
      if (r > scan.range_max) r = scan.range_max;
    }
  }
  return scan;
}

}  // namespace racebench
