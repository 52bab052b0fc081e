#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "semnav/core/rng.hpp"
#include "semnav/core/types.hpp"
#include "semnav/frontier/frontier.hpp"
#include "semnav/perception/detection.hpp"

namespace semnav::reasoning {

using core::Instruction;
using core::ObjectLabel;
using frontier::Frontier;
using perception::ObjectPrompt;
using sim::Observation;

/// Hard provider failure (exhausted retries on the proposal path); episodes
/// abort with a provider-error result, reported separately from navigation
/// failures.
struct ProviderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Proposal {
  std::vector<ObjectLabel> objects;
  std::string thought;  // chain-of-thought rationale; empty with CoT off
};

struct DiscoveryResult {
  std::vector<ObjectLabel> discovered;  // novel scene objects
  std::vector<ObjectLabel> promoted;    // discovered objects that satisfy the instruction
};

struct FrontierScores {
  std::vector<double> scores;  // aligned with the submitted frontier list, in [0,1]
};

/// Everything the frontier-rating role sees: the frontiers with their
/// summaries, the detection prompt, the goal objects, and the proposal
/// thought.
struct ReasonRequest {
  const std::vector<Frontier>& frontiers;
  const ObjectPrompt& prompt;
  std::vector<ObjectLabel> goals;
  std::string thought;
};

class Proposer {
 public:
  virtual ~Proposer() = default;
  virtual Proposal propose(const Instruction& instruction) = 0;
};

class Discoverer {
 public:
  virtual ~Discoverer() = default;
  /// Best-effort; implementations return an empty result on failure.
  virtual DiscoveryResult discover(const Observation& obs,
                                   const Instruction& instruction,
                                   const std::vector<ObjectLabel>& known) = 0;
};

class FrontierScorer {
 public:
  virtual ~FrontierScorer() = default;
  /// Must return one score in [0,1] per frontier; implementations fall back
  /// to uniform scores rather than failing.
  virtual FrontierScores score(const ReasonRequest& request) = 0;
};

/// Bernoulli(sigma_freq) gate on the episode RNG stream.
bool should_discover(core::Rng& rng, double sigma_freq);

/// Index of the frontier with the maximal score; ties break to the larger
/// frontier, then the lower index.
size_t pick_frontier(const FrontierScores& scores,
                     const std::vector<Frontier>& frontiers);

}  // namespace semnav::reasoning
