#pragma once

#include <vector>

#include "semnav/core/types.hpp"
#include "semnav/frontier/frontier.hpp"
#include "semnav/mapping/vssm.hpp"
#include "semnav/planner/field.hpp"
#include "semnav/planner/policy.hpp"
#include "semnav/sim/simulator.hpp"

namespace semnav::agent {

using core::ObjectLabel;

/// The 15 user-defined prior object categories the detector always watches.
const std::vector<ObjectLabel>& default_prior_objects();

struct AgentConfig {
  double sigma_freq = 0.01;           // discovery gate probability
  int delta = 20;                     // frontier goal update interval, steps
  double confidence_threshold = 0.55; // detection + goal-location threshold
  std::vector<ObjectLabel> prior_objects = default_prior_objects();
  int max_steps = 500;
  double success_radius = 1.0;
  uint64_t seed = 0;

  double stop_margin_m = 0.15;  // stop this far inside the success radius
  int replan_interval = 10;     // field recompute cadence in steps
  bool no_discovery = false;    // ablation: never call the discoverer
};

/// Everything one episode needs besides the scene and the providers.
struct EpisodeSetup {
  AgentConfig agent;
  sim::SimConfig sim;
  mapping::MapConfig map;
  frontier::FrontierConfig frontier;
  planner::FieldConfig field;
  planner::PolicyConfig policy;
};

}  // namespace semnav::agent
