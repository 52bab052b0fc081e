#include "semnav/reasoning/mock.hpp"

#include <algorithm>
#include <set>

namespace semnav::reasoning {

Proposal MockProposer::propose(const Instruction& instruction) {
  Proposal p;
  p.objects = lexicon_.propose(instruction.text);
  if (p.objects.empty())
    throw ProviderError("propose: no objects extracted from instruction: " +
                        instruction.text);
  if (cot_) {
    p.thought = "The instruction \"" + instruction.text +
                "\" can be satisfied by: ";
    for (size_t i = 0; i < p.objects.size(); ++i) {
      if (i) p.thought += ", ";
      p.thought += p.objects[i].phrase();
    }
    p.thought += ".";
  }
  return p;
}

MockDiscoverer::MockDiscoverer(const sim::SceneSpec& scene,
                               sim::CameraIntrinsics camera, double max_range,
                               const Lexicon& lexicon)
    : scene_(scene),
      columns_(sim::ColumnGrid::build(scene)),
      camera_(camera),
      max_range_(max_range),
      lexicon_(lexicon) {}

DiscoveryResult MockDiscoverer::discover(const Observation& obs,
                                         const Instruction& instruction,
                                         const std::vector<ObjectLabel>& known) {
  sim::RenderedFrame local;
  const sim::RenderedFrame* frame;
  if (frame_source_) {
    frame = &frame_source_(obs.pose);
  } else {
    local = sim::render_frame(scene_, columns_, obs.pose, camera_, max_range_);
    frame = &local;
  }

  std::vector<int> pixel_count(scene_.objects.size(), 0);
  for (size_t i = 0; i < frame->object_id.size(); ++i) {
    const int32_t id = frame->object_id[i];
    if (id >= 0) ++pixel_count[id];
  }

  std::set<std::string> known_names;
  for (const auto& label : known) known_names.insert(label.name);

  DiscoveryResult result;
  std::set<std::string> emitted;
  for (size_t i = 0; i < scene_.objects.size(); ++i) {
    if (pixel_count[i] < min_pixels) continue;
    const auto& label = scene_.objects[i].label;
    if (known_names.count(label.name)) continue;
    if (!emitted.insert(label.name).second) continue;
    result.discovered.push_back(ObjectLabel(label.name));  // category, no attrs
    if (lexicon_.satisfies(instruction.text, label.name))
      result.promoted.push_back(ObjectLabel(label.name));
  }
  return result;
}

FrontierScores CooccurrenceScorer::score(const ReasonRequest& request) {
  FrontierScores out;
  out.scores.reserve(request.frontiers.size());
  for (const auto& f : request.frontiers) {
    if (f.nearby_objects.empty()) {
      out.scores.push_back(table_.nothing_score());
      continue;
    }
    double best = 0.0;
    for (const auto& goal : request.goals)
      for (const auto& [nearby, score] : f.nearby_objects)
        best = std::max(best, table_.score(goal.name, nearby.name));
    out.scores.push_back(std::clamp(best, 0.0, 1.0));
  }
  return out;
}

FrontierScores UniformRandomScorer::score(const ReasonRequest& request) {
  FrontierScores out;
  for (size_t i = 0; i < request.frontiers.size(); ++i)
    out.scores.push_back(rng_.uniform01());
  return out;
}

FrontierScores SingleChoiceScorer::score(const ReasonRequest& request) {
  FrontierScores out{std::vector<double>(request.frontiers.size(), 0.0)};
  if (!out.scores.empty()) out.scores[0] = 1.0;
  return out;
}

bool should_discover(core::Rng& rng, double sigma_freq) {
  if (sigma_freq <= 0.0) return false;
  if (sigma_freq >= 1.0) return true;
  return rng.bernoulli(sigma_freq);
}

size_t pick_frontier(const FrontierScores& scores,
                     const std::vector<Frontier>& frontiers) {
  if (scores.scores.size() != frontiers.size() || frontiers.empty())
    throw std::invalid_argument("pick_frontier: misaligned or empty inputs");
  size_t best = 0;
  for (size_t i = 1; i < frontiers.size(); ++i) {
    if (scores.scores[i] > scores.scores[best] ||
        (scores.scores[i] == scores.scores[best] &&
         frontiers[i].size > frontiers[best].size))
      best = i;
  }
  return best;
}

}  // namespace semnav::reasoning
