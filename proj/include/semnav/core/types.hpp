#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace semnav::core {

constexpr double kPi = std::numbers::pi;

/// Wraps an angle into (-pi, pi].
inline double normalize_angle(double a) {
  while (a > kPi) a -= 2.0 * kPi;
  while (a <= -kPi) a += 2.0 * kPi;
  return a;
}

inline double deg_to_rad(double d) { return d * kPi / 180.0; }
inline double rad_to_deg(double r) { return r * 180.0 / kPi; }

/// Agent/camera pose in the world frame (right-handed, z up, floor at z=0).
/// yaw is measured counterclockwise from +x in the floor plane; pitch is the
/// camera tilt above horizontal (0 = level, -pi/2 = straight down).
struct Pose {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double yaw = 0.0;
  double pitch = 0.0;

  bool operator==(const Pose&) const = default;
};

/// Pinhole camera model, pixel units.
struct CameraIntrinsics {
  int width = 0;
  int height = 0;
  double fx = 0.0;
  double fy = 0.0;
  double cx = 0.0;
  double cy = 0.0;

  bool valid() const {
    return width > 0 && height > 0 && fx > 0.0 && fy > 0.0 && cx >= 0.0 &&
           cx < width && cy >= 0.0 && cy < height;
  }

  /// Builds intrinsics from a horizontal field of view.
  static CameraIntrinsics from_hfov(int width, int height, double hfov_rad) {
    CameraIntrinsics k;
    k.width = width;
    k.height = height;
    k.fx = (width / 2.0) / std::tan(hfov_rad / 2.0);
    k.fy = k.fx;  // square pixels
    k.cx = width / 2.0;
    k.cy = height / 2.0;
    return k;
  }
};

/// The six-element discrete action space.
enum class Action : uint8_t {
  stop,
  move_forward,
  turn_left,
  turn_right,
  look_up,
  look_down,
};

inline const char* action_name(Action a) {
  switch (a) {
    case Action::stop: return "stop";
    case Action::move_forward: return "move_forward";
    case Action::turn_left: return "turn_left";
    case Action::turn_right: return "turn_right";
    case Action::look_up: return "look_up";
    case Action::look_down: return "look_down";
  }
  return "?";
}

Action action_from_name(const std::string& name);

/// A named object category, optionally qualified by attribute phrases
/// ("red", "next to window"). Names are lowercased on construction;
/// attribute strings must not contain the prompt separator '.'.
struct ObjectLabel {
  std::string name;
  std::vector<std::string> attributes;

  ObjectLabel() = default;
  explicit ObjectLabel(std::string n, std::vector<std::string> attrs = {})
      : name(std::move(n)), attributes(std::move(attrs)) {
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (name.empty()) throw std::invalid_argument("ObjectLabel: empty name");
    for (auto& a : attributes) {
      std::transform(a.begin(), a.end(), a.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      if (a.find('.') != std::string::npos)
        throw std::invalid_argument("ObjectLabel: attribute contains '.'");
    }
  }

  /// Rendered phrase: attributes (in order) followed by the name.
  std::string phrase() const {
    std::string s;
    for (const auto& a : attributes) {
      s += a;
      s += ' ';
    }
    s += name;
    return s;
  }

  bool operator==(const ObjectLabel& o) const {
    return name == o.name && attributes == o.attributes;
  }
};

struct Instruction {
  std::string text;
  explicit Instruction(std::string t) : text(std::move(t)) {
    if (text.empty()) throw std::invalid_argument("Instruction: empty text");
  }
};

struct GridIndex {
  int row = 0;
  int col = 0;
  bool operator==(const GridIndex&) const = default;
  auto operator<=>(const GridIndex&) const = default;
};

/// Applies one non-stop action to a pose. Pure; no collision handling.
Pose pose_step(const Pose& pose, Action action, double forward_m,
               double turn_rad, double tilt_rad);

}  // namespace semnav::core
