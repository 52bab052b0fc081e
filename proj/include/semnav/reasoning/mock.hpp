#pragma once

#include "semnav/reasoning/cooccurrence.hpp"
#include "semnav/reasoning/lexicon.hpp"
#include "semnav/reasoning/providers.hpp"
#include "semnav/sim/render.hpp"

namespace semnav::reasoning {

/// Deterministic lexicon-driven proposer. Throws ProviderError when the
/// instruction yields no objects at all (malformed instruction).
class MockProposer : public Proposer {
 public:
  explicit MockProposer(bool chain_of_thought = true,
                        const Lexicon& lexicon = Lexicon::builtin())
      : cot_(chain_of_thought), lexicon_(lexicon) {}

  Proposal propose(const Instruction& instruction) override;

 private:
  bool cot_;
  const Lexicon& lexicon_;
};

/// Ground-truth-backed discoverer: reports visible scene labels absent from
/// the known set and promotes those that satisfy the instruction.
class MockDiscoverer : public Discoverer {
 public:
  using FrameSource = std::function<const sim::RenderedFrame&(const core::Pose&)>;

  MockDiscoverer(const sim::SceneSpec& scene, sim::CameraIntrinsics camera,
                 double max_range, const Lexicon& lexicon = Lexicon::builtin());

  void set_frame_source(FrameSource source) { frame_source_ = std::move(source); }

  DiscoveryResult discover(const Observation& obs, const Instruction& instruction,
                           const std::vector<ObjectLabel>& known) override;

  /// Minimum visible pixels before an object counts as discovered.
  int min_pixels = 4;

 private:
  const sim::SceneSpec& scene_;
  sim::ColumnGrid columns_;
  sim::CameraIntrinsics camera_;
  double max_range_;
  const Lexicon& lexicon_;
  FrameSource frame_source_;
};

/// Frontier rating from the shipped co-occurrence prior:
/// score_i = max over (goal, nearby object) pairs of cooccur(goal, nearby);
/// frontiers with no recognizable objects score the table's nothing value.
class CooccurrenceScorer : public FrontierScorer {
 public:
  explicit CooccurrenceScorer(CooccurrenceTable table = CooccurrenceTable::builtin())
      : table_(std::move(table)) {}

  FrontierScores score(const ReasonRequest& request) override;

  const CooccurrenceTable& table() const { return table_; }

 private:
  CooccurrenceTable table_;
};

/// Baseline for the guidance comparison: seeded uniform scores.
class UniformRandomScorer : public FrontierScorer {
 public:
  explicit UniformRandomScorer(uint64_t seed)
      : rng_(core::derive_seed(seed, 0x5c03)) {}

  FrontierScores score(const ReasonRequest& request) override;

 private:
  core::Rng rng_;
};

/// "Pick one frontier directly" stand-in used by the no_scoring ablation:
/// deterministically selects the largest frontier (index 0 after sorting).
class SingleChoiceScorer : public FrontierScorer {
 public:
  FrontierScores score(const ReasonRequest& request) override;
};

}  // namespace semnav::reasoning
