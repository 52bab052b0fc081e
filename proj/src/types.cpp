#include "semnav/core/types.hpp"

namespace semnav::core {

Action action_from_name(const std::string& name) {
  if (name == "stop") return Action::stop;
  if (name == "move_forward") return Action::move_forward;
  if (name == "turn_left") return Action::turn_left;
  if (name == "turn_right") return Action::turn_right;
  if (name == "look_up") return Action::look_up;
  if (name == "look_down") return Action::look_down;
  throw std::invalid_argument("unknown action: " + name);
}

Pose pose_step(const Pose& pose, Action action, double forward_m,
               double turn_rad, double tilt_rad) {
  Pose p = pose;
  switch (action) {
    case Action::move_forward:
      p.x += forward_m * std::cos(pose.yaw);
      p.y += forward_m * std::sin(pose.yaw);
      break;
    case Action::turn_left:
      p.yaw = normalize_angle(pose.yaw + turn_rad);
      break;
    case Action::turn_right:
      p.yaw = normalize_angle(pose.yaw - turn_rad);
      break;
    case Action::look_up:
      p.pitch = std::min(pose.pitch + tilt_rad, kPi / 2.0);
      break;
    case Action::look_down:
      p.pitch = std::max(pose.pitch - tilt_rad, -kPi / 2.0);
      break;
    case Action::stop:
      throw std::invalid_argument("pose_step: stop is not a motion");
  }
  return p;
}

}  // namespace semnav::core
