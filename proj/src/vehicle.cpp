#include "racebench/vehicle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace racebench {

void VehicleParams::validate() const {
  if (wheelbase <= 0.0 || max_steer <= 0.0 || max_speed <= 0.0 || max_accel <= 0.0 ||
      max_steer_rate <= 0.0 || footprint_radius <= 0.0) {
    throw std::invalid_argument("vehicle parameters must all be strictly positive");
  }
}

namespace {

double slew(double current, double target, double max_delta) {
  return current + std::clamp(target - current, -max_delta, max_delta);
}

}  // namespace

VehicleState step(const VehicleState& state, const DriveCommand& cmd, const VehicleParams& params,
                  double dt) {
  if (dt <= 0.0) {
    throw std::invalid_argument("dt must be positive");
  }

  VehicleState next = state;
  const double steer_target = std::clamp(cmd.steering_angle, -params.max_steer, params.max_steer);
  next.steer = slew(state.steer, steer_target, params.max_steer_rate * dt);
  const double speed_target = std::clamp(cmd.speed, 0.0, params.max_speed);
  next.v = slew(state.v, speed_target, params.max_accel * dt);

  const double yaw = state.pose.yaw;
  next.pose = Pose2D(state.pose.x + next.v * std::cos(yaw) * dt,
                     state.pose.y + next.v * std::sin(yaw) * dt,
                     yaw + next.v / params.wheelbase * std::tan(next.steer) * dt);
  return next;
}

}  // namespace racebench
