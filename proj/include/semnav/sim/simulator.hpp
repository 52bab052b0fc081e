#pragma once

#include <optional>

#include "semnav/core/rng.hpp"
#include "semnav/sim/paths.hpp"
#include "semnav/sim/render.hpp"
#include "semnav/sim/scene.hpp"

namespace semnav::sim {

using core::Action;

/// One timestep's sensory bundle.
struct Observation {
  core::Grid2D<float> depth;  // meters, +inf = no hit within range
  Pose pose;
  std::vector<uint8_t> rgb_handle;  // opaque; forwarded to remote providers
};

struct StepOutcome {
  Observation observation;
  bool collided = false;
  bool done = false;
};

struct SimConfig {
  CameraIntrinsics camera = CameraIntrinsics::from_hfov(640, 480, core::deg_to_rad(79.0));
  double camera_height = 0.88;   // meters
  double max_range = 10.0;       // depth sensor range, meters
  double forward_m = 0.25;
  double turn_rad = core::deg_to_rad(30.0);
  double tilt_rad = core::deg_to_rad(30.0);
  double agent_radius = 0.18;
  int max_steps = 500;
  double success_radius = 1.0;
  double depth_noise_sigma = 0.0;  // optional Gaussian noise on finite depths
  bool attach_rgb = false;
  uint64_t seed = 0;
};

/// Single-episode 2.5D simulator: renders depth by raycasting, steps the
/// agent with swept-disc collision checks, and tracks the episode budget.
class Simulator {
 public:
  Simulator(SceneSpec scene, SimConfig config);

  const SceneSpec& scene() const { return scene_; }
  const SimConfig& config() const { return config_; }
  const Pose& pose() const { return pose_; }
  int steps_taken() const { return steps_; }
  double path_length() const { return path_length_; }
  bool done() const { return done_; }
  bool stopped() const { return stopped_; }

  /// The noise-free rendered frame at the current pose (cached).
  const RenderedFrame& current_frame();

  /// Renders a frame at an arbitrary pose (uncached; for oracles and tests).
  RenderedFrame render_at(const Pose& pose) const;

  Observation observe();

  /// Applies one action. Blocked forward moves leave the pose unchanged and
  /// report collided=true. done becomes true on stop or budget exhaustion.
  StepOutcome step(Action action);

  /// True iff a disc of agent radius centered at (x, y) overlaps no blocked
  /// cell and stays inside the grid.
  bool disc_free(double x, double y) const;

  bool success() const { return is_success(scene_, pose_, config_.success_radius); }

 private:
  SceneSpec scene_;
  SimConfig config_;
  core::Grid2D<uint8_t> blocked_;
  ColumnGrid columns_;
  Pose pose_;
  int steps_ = 0;
  double path_length_ = 0.0;
  bool done_ = false;
  bool stopped_ = false;
  core::Rng noise_rng_;
  std::optional<Pose> frame_pose_;
  RenderedFrame frame_;
  std::optional<Pose> obs_pose_;
  Observation obs_;
};

}  // namespace semnav::sim
