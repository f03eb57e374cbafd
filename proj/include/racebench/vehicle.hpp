#pragma once

#include "racebench/geometry.hpp"
#include "racebench/messages.hpp"

namespace racebench {

struct VehicleParams {
  double wheelbase{0.33};
  double max_steer{0.42};
  double max_speed{6.0};
  double max_accel{6.0};
  double max_steer_rate{8.0};
  double footprint_radius{0.15};

  void validate() const;
};

struct VehicleState {
  Pose2D pose;
  double v{0.0};
  double steer{0.0};
};

// One kinematic-bicycle integration step. Actuator limiting happens before
// integration, steering first: steer slews toward the clamped command at
// max_steer_rate, speed toward the clamped command at max_accel, then the
// pose advances with the post-slew values (position before heading).
VehicleState step(const VehicleState& state, const DriveCommand& cmd, const VehicleParams& params,
                  double dt);

}  // namespace racebench
