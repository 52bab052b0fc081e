#pragma once

#include "semnav/core/types.hpp"
#include "semnav/planner/field.hpp"

namespace semnav::planner {

using core::Action;
using core::Pose;

struct PolicyConfig {
  double lookahead_m = 0.3;   // descent search disc around the agent
  double turn_rad = core::deg_to_rad(30.0);
  double forward_m = 0.25;
};

struct PolicyDecision {
  bool replan = false;  // agent cell non-traversable or field infinite there
  Action action = Action::move_forward;
};

/// Greedy descent on the distance field: head toward the minimum-value cell
/// within the lookahead disc; turn (shorter side, ties to turn_left) when
/// the heading is off by more than turn_rad / 2, otherwise move forward.
/// Never emits stop.
PolicyDecision next_action(const DistanceField& field, const Pose& pose,
                           const PolicyConfig& config = {});

/// Collision feedback: writes the cell one forward step ahead of the pose
/// into the occupied channel at score 1.0 and returns it. No-op (nullopt)
/// unless the last action was move_forward.
std::optional<core::GridIndex> handle_collision(mapping::VSSM& map,
                                                const Pose& pose,
                                                Action last_action,
                                                double forward_m = 0.25);

}  // namespace semnav::planner
