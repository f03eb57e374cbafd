#pragma once

#include <cmath>

namespace racebench {

inline constexpr double kPi = 3.14159265358979323846;

// Wraps an angle into (-pi, pi]. The result differs from the input by an
// exact multiple of 2*pi (up to rounding of the 2*pi constant itself).
inline double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a <= -kPi) {
    a += 2.0 * kPi;
  } else if (a > kPi) {
    a -= 2.0 * kPi;
  }
  return a;
}

struct Vec2 {
  double x{0.0};
  double y{0.0};

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  double squared_norm() const { return x * x + y * y; }
};

// Planar pose. Yaw is normalized into (-pi, pi] on construction.
struct Pose2D {
  double x{0.0};
  double y{0.0};
  double yaw{0.0};

  Pose2D() = default;
  Pose2D(double x_, double y_, double yaw_) : x(x_), y(y_), yaw(wrap_angle(yaw_)) {}

  Vec2 position() const { return {x, y}; }
};

struct StampedPose {
  double t{0.0};
  Pose2D pose;
};

// SE(2) composition: a then b expressed in a's frame.
inline Pose2D se2_compose(const Pose2D& a, const Pose2D& b) {
  const double c = std::cos(a.yaw);
  const double s = std::sin(a.yaw);
  return {a.x + c * b.x - s * b.y, a.y + s * b.x + c * b.y, a.yaw + b.yaw};
}

inline Pose2D se2_inverse(const Pose2D& a) {
  const double c = std::cos(a.yaw);
  const double s = std::sin(a.yaw);
  return {-(c * a.x + s * a.y), -(-s * a.x + c * a.y), -a.yaw};
}

// Expresses a world point in the frame of `pose`.
inline Vec2 world_to_frame(const Pose2D& pose, const Vec2& p) {
  const double c = std::cos(pose.yaw);
  const double s = std::sin(pose.yaw);
  const double dx = p.x - pose.x;
  const double dy = p.y - pose.y;
  return {c * dx + s * dy, -s * dx + c * dy};
}

}  // namespace racebench
