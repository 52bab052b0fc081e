#include "semnav/perception/oracle.hpp"

#include <algorithm>

namespace semnav::perception {

OracleDetector::OracleDetector(const sim::SceneSpec& scene,
                               sim::CameraIntrinsics camera, double max_range,
                               OracleNoise noise, uint64_t seed)
    : scene_(scene),
      columns_(sim::ColumnGrid::build(scene)),
      camera_(camera),
      max_range_(max_range),
      noise_(std::move(noise)),
      rng_(core::derive_seed(seed, 0xdec7)) {}

std::vector<Detection> OracleDetector::detect(const Observation& obs,
                                              const ObjectPrompt& prompt) {
  std::vector<Detection> out;
  if (prompt.empty()) return out;

  sim::RenderedFrame local;
  const sim::RenderedFrame* frame;
  if (frame_source_) {
    frame = &frame_source_(obs.pose);
  } else {
    local = sim::render_frame(scene_, columns_, obs.pose, camera_, max_range_);
    frame = &local;
  }

  // Visible pixels per object instance.
  std::vector<std::vector<int>> masks(scene_.objects.size());
  for (int v = 0; v < camera_.height; ++v)
    for (int u = 0; u < camera_.width; ++u) {
      const int32_t id = frame->object_id.at(v, u);
      if (id >= 0) masks[id].push_back(v * camera_.width + u);
    }

  for (const auto& label : prompt.labels) {
    for (size_t i = 0; i < masks.size(); ++i) {
      if (masks[i].empty()) continue;
      const auto& inst = scene_.objects[i].label;
      if (inst.name != label.name) continue;
      bool attrs_ok = true;
      for (const auto& a : label.attributes)
        if (std::find(inst.attributes.begin(), inst.attributes.end(), a) ==
            inst.attributes.end()) {
          attrs_ok = false;
          break;
        }
      if (!attrs_ok) continue;

      ObjectLabel emitted = label;
      float confidence = static_cast<float>(kConstantConfidence);
      bool dropped = false;
      if (noise_.enabled) {
        if (noise_.false_negative > 0.0 && rng_.bernoulli(noise_.false_negative))
          continue;
        auto conf_it = noise_.confusion.find(label.name);
        if (conf_it != noise_.confusion.end()) {
          const double roll = rng_.uniform01();
          double acc = 0.0;
          for (const auto& [other, p] : conf_it->second) {
            acc += p;
            if (roll < acc) {
              const int idx = [&] {
                for (size_t k = 0; k < prompt.labels.size(); ++k)
                  if (prompt.labels[k].name == other) return static_cast<int>(k);
                return -1;
              }();
              if (idx < 0)
                dropped = true;  // substitute not in prompt
              else
                emitted = prompt.labels[idx];
              break;
            }
          }
        }
        if (noise_.beta_confidence) {
          const double a = noise_.beta_mean * noise_.beta_concentration;
          const double b = (1.0 - noise_.beta_mean) * noise_.beta_concentration;
          confidence = static_cast<float>(std::clamp(rng_.beta(a, b), 0.0, 1.0));
        }
      }
      if (!dropped) out.push_back(Detection{emitted, confidence, masks[i]});
    }
  }
  return out;
}

}  // namespace semnav::perception
