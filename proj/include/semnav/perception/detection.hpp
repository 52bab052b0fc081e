#pragma once

#include <string>
#include <vector>

#include "semnav/core/types.hpp"
#include "semnav/sim/simulator.hpp"

namespace semnav::perception {

using core::ObjectLabel;
using sim::Observation;

/// A confidence-scored pixel mask for one detected object instance.
/// Pixels are row-major indices (v * width + u), sorted ascending.
struct Detection {
  ObjectLabel label;
  float confidence = 0.0f;
  std::vector<int> mask;
};

/// The dot-separated open-vocabulary detection prompt. Labels keep a stable
/// order: prior objects, then proposals, then discovered objects, with
/// case-insensitive deduplication on the rendered phrase.
struct ObjectPrompt {
  std::vector<ObjectLabel> labels;
  std::string rendered;

  bool empty() const { return labels.empty(); }

  /// Index of the prompt label with this phrase, or -1.
  int find(const std::string& phrase) const;
};

ObjectPrompt build_prompt(const std::vector<ObjectLabel>& proposed,
                          const std::vector<ObjectLabel>& discovered,
                          const std::vector<ObjectLabel>& prior);

std::vector<Detection> filter_by_confidence(std::vector<Detection> detections,
                                            double threshold);

/// PerceptVLM interface. Backends must only ever emit labels present in the
/// prompt; failures degrade to an empty result.
class Detector {
 public:
  virtual ~Detector() = default;
  virtual std::vector<Detection> detect(const Observation& obs,
                                        const ObjectPrompt& prompt) = 0;
};

}  // namespace semnav::perception
