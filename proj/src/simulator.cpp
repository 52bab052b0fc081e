#include "semnav/sim/simulator.hpp"

#include <cstdio>

namespace semnav::sim {

Simulator::Simulator(SceneSpec scene, SimConfig config)
    : scene_(std::move(scene)),
      config_(config),
      blocked_(scene_.blocked_grid()),
      columns_(ColumnGrid::build(scene_)),
      pose_(scene_.start),
      noise_rng_(core::derive_seed(config.seed, 0x5e)) {
  pose_.z = config_.camera_height;
}

const RenderedFrame& Simulator::current_frame() {
  if (!frame_pose_ || !(*frame_pose_ == pose_)) {
    frame_ = render_frame(scene_, columns_, pose_, config_.camera, config_.max_range);
    frame_pose_ = pose_;
  }
  return frame_;
}

RenderedFrame Simulator::render_at(const Pose& pose) const {
  return render_frame(scene_, columns_, pose, config_.camera, config_.max_range);
}

Observation Simulator::observe() {
  if (obs_pose_ && *obs_pose_ == pose_) return obs_;
  const RenderedFrame& frame = current_frame();
  Observation obs;
  obs.depth = frame.depth;
  obs.pose = pose_;
  if (config_.depth_noise_sigma > 0.0) {
    for (auto& d : obs.depth.data())
      if (std::isfinite(d))
        d = std::max(0.0f, d + static_cast<float>(noise_rng_.normal(
                               0.0, config_.depth_noise_sigma)));
  }
  if (config_.attach_rgb) {
    // Tiny PPM of the hit-id map; opaque to everything local.
    const auto& K = config_.camera;
    std::string ppm = "P6\n" + std::to_string(K.width) + " " +
                      std::to_string(K.height) + "\n255\n";
    for (int v = 0; v < K.height; ++v)
      for (int u = 0; u < K.width; ++u) {
        const int32_t id = frame.object_id.at(v, u);
        const uint8_t k = static_cast<uint8_t>(frame.kind.at(v, u));
        ppm.push_back(static_cast<char>(37 * (id + 2)));
        ppm.push_back(static_cast<char>(61 * k));
        ppm.push_back(static_cast<char>(
            std::isfinite(frame.depth.at(v, u))
                ? 255 - std::min(255.0f, frame.depth.at(v, u) * 25.0f)
                : 0));
      }
    obs.rgb_handle.assign(ppm.begin(), ppm.end());
  }
  obs_ = obs;
  obs_pose_ = pose_;
  return obs_;
}

bool Simulator::disc_free(double x, double y) const {
  const double res = scene_.resolution;
  const double r = config_.agent_radius;
  const int r_lo = static_cast<int>(std::floor((x - r) / res));
  const int r_hi = static_cast<int>(std::floor((x + r) / res));
  const int c_lo = static_cast<int>(std::floor((y - r) / res));
  const int c_hi = static_cast<int>(std::floor((y + r) / res));
  for (int cr = r_lo; cr <= r_hi; ++cr) {
    for (int cc = c_lo; cc <= c_hi; ++cc) {
      // Closest point of the cell rectangle to the disc center.
      const double px = std::clamp(x, cr * res, (cr + 1) * res);
      const double py = std::clamp(y, cc * res, (cc + 1) * res);
      const double d2 = (px - x) * (px - x) + (py - y) * (py - y);
      if (d2 >= r * r) continue;
      if (!blocked_.in_bounds(cr, cc) || blocked_.at(cr, cc) != 0) return false;
    }
  }
  return true;
}

StepOutcome Simulator::step(Action action) {
  if (done_) throw std::logic_error("Simulator::step: episode already done");
  StepOutcome out;
  if (action == Action::stop) {
    stopped_ = true;
    done_ = true;
  } else if (action == Action::move_forward) {
    const Pose target = core::pose_step(pose_, action, config_.forward_m,
                                        config_.turn_rad, config_.tilt_rad);
    const double step_len = scene_.resolution / 2.0;
    const int samples = std::max(1, static_cast<int>(std::ceil(config_.forward_m / step_len)));
    bool clear = true;
    for (int i = 1; i <= samples; ++i) {
      const double s = std::min(1.0, static_cast<double>(i) / samples);
      const double x = pose_.x + (target.x - pose_.x) * s;
      const double y = pose_.y + (target.y - pose_.y) * s;
      if (!disc_free(x, y)) {
        clear = false;
        break;
      }
    }
    if (clear) {
      pose_ = target;
      path_length_ += config_.forward_m;
    } else {
      out.collided = true;
    }
  } else {
    pose_ = core::pose_step(pose_, action, config_.forward_m, config_.turn_rad,
                            config_.tilt_rad);
  }
  ++steps_;
  if (!done_ && steps_ >= config_.max_steps) done_ = true;
  out.done = done_;
  out.observation = observe();
  return out;
}

}  // namespace semnav::sim
