#pragma once

#include <optional>

#include "semnav/sim/scene.hpp"

namespace semnav::sim {

/// Geodesic distance (meters) on the free-space grid from `start` to the
/// nearest free cell within `success_radius` of any goal-instance cell.
/// 8-connected Dijkstra with {1, sqrt(2)}*resolution edge weights; diagonal
/// moves that cut a blocked corner are disallowed.
/// Throws SceneError when no goal region is reachable.
double shortest_path_length(const SceneSpec& scene, const Pose& start,
                            const std::vector<ObjectLabel>& goal_labels,
                            double success_radius = 1.0);

/// True iff some goal-object cell center lies within `success_radius` of the
/// pose and the straight floor-plane segment to it crosses no wall and no
/// non-goal object cell.
bool is_success(const SceneSpec& scene, const Pose& pose,
                double success_radius = 1.0);

/// Cells of all goal instances (deduplicated).
std::vector<GridIndex> goal_cells(const SceneSpec& scene);

}  // namespace semnav::sim
