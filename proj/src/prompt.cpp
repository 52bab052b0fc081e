#include "semnav/perception/detection.hpp"

#include <set>

namespace semnav::perception {

int ObjectPrompt::find(const std::string& phrase) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i].phrase() == phrase) return static_cast<int>(i);
  return -1;
}

ObjectPrompt build_prompt(const std::vector<ObjectLabel>& proposed,
                          const std::vector<ObjectLabel>& discovered,
                          const std::vector<ObjectLabel>& prior) {
  ObjectPrompt prompt;
  std::set<std::string> seen;
  auto add_all = [&](const std::vector<ObjectLabel>& labels) {
    for (const auto& label : labels) {
      // ObjectLabel lowercases its fields, so the phrase is already
      // case-normalized.
      if (seen.insert(label.phrase()).second) prompt.labels.push_back(label);
    }
  };
  add_all(prior);
  add_all(proposed);
  add_all(discovered);
  for (size_t i = 0; i < prompt.labels.size(); ++i) {
    if (i) prompt.rendered += '.';
    prompt.rendered += prompt.labels[i].phrase();
  }
  return prompt;
}

std::vector<Detection> filter_by_confidence(std::vector<Detection> detections,
                                            double threshold) {
  std::erase_if(detections, [&](const Detection& d) {
    return d.confidence < threshold;
  });
  return detections;
}

}  // namespace semnav::perception
