#pragma once

#include <functional>
#include <map>

#include "semnav/core/rng.hpp"
#include "semnav/perception/detection.hpp"
#include "semnav/sim/render.hpp"

namespace semnav::perception {

/// Optional corruption model for the oracle backend. All draws come from a
/// per-episode seeded stream, so noisy outputs are reproducible.
struct OracleNoise {
  bool enabled = false;
  double false_negative = 0.0;  // per-detection drop probability
  bool beta_confidence = false; // otherwise the constant below
  double beta_mean = 0.9;
  double beta_concentration = 20.0;
  /// name -> [(confused-with name, probability)]; the substitute label must
  /// itself be in the prompt or the detection is dropped.
  std::map<std::string, std::vector<std::pair<std::string, double>>> confusion;
};

/// Ground-truth-backed PerceptVLM: emits the simulator's masks for every
/// visible object whose label matches a prompt entry (name equality plus
/// attribute containment), at constant confidence 0.9 unless noise is on.
class OracleDetector : public Detector {
 public:
  using FrameSource = std::function<const sim::RenderedFrame&(const core::Pose&)>;

  OracleDetector(const sim::SceneSpec& scene, sim::CameraIntrinsics camera,
                 double max_range, OracleNoise noise = {}, uint64_t seed = 0);

  /// Renders through `source` instead of its own raycaster (lets an episode
  /// share the simulator's per-pose frame cache).
  void set_frame_source(FrameSource source) { frame_source_ = std::move(source); }

  std::vector<Detection> detect(const Observation& obs,
                                const ObjectPrompt& prompt) override;

  static constexpr double kConstantConfidence = 0.9;

 private:
  const sim::SceneSpec& scene_;
  sim::ColumnGrid columns_;
  sim::CameraIntrinsics camera_;
  double max_range_;
  OracleNoise noise_;
  core::Rng rng_;
  FrameSource frame_source_;
};

}  // namespace semnav::perception
