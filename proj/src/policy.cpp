#include "semnav/planner/policy.hpp"

#include <cmath>

namespace semnav::planner {

PolicyDecision next_action(const DistanceField& field, const Pose& pose,
                           const PolicyConfig& config) {
  const GridIndex agent = field.world_to_cell(pose.x, pose.y);
  if (!field.values.in_bounds(agent) || !field.traversable.at(agent) ||
      !std::isfinite(field.at(agent)))
    return {.replan = true};

  const double res = field.resolution;
  const int reach = std::max(1, static_cast<int>(std::ceil(config.lookahead_m / res)));
  GridIndex best = agent;
  double best_value = field.at(agent);
  for (int dr = -reach; dr <= reach; ++dr) {
    for (int dc = -reach; dc <= reach; ++dc) {
      const GridIndex cell{agent.row + dr, agent.col + dc};
      if (!field.values.in_bounds(cell)) continue;
      if (std::hypot(dr, dc) * res > config.lookahead_m + 1e-12) continue;
      const double v = field.at(cell);
      if (v < best_value) {
        best_value = v;
        best = cell;
      }
    }
  }
  if (best == agent) return {.replan = true};  // no descent direction here

  const auto [bx, by] = field.cell_center(best);
  const double heading = std::atan2(by - pose.y, bx - pose.x);
  const double diff = core::normalize_angle(heading - pose.yaw);
  if (std::abs(diff) > config.turn_rad / 2.0) {
    return {.replan = false,
            .action = diff > 0.0 ? Action::turn_left : Action::turn_right};
  }
  return {.replan = false, .action = Action::move_forward};
}

std::optional<core::GridIndex> handle_collision(mapping::VSSM& map,
                                                const Pose& pose,
                                                Action last_action,
                                                double forward_m) {
  if (last_action != Action::move_forward) return std::nullopt;
  const double x = pose.x + forward_m * std::cos(pose.yaw);
  const double y = pose.y + forward_m * std::sin(pose.yaw);
  const core::GridIndex cell = map.world_to_cell(x, y);
  if (!map.in_bounds(cell)) return std::nullopt;
  map.mark_occupied(cell, 1.0f);
  return cell;
}

}  // namespace semnav::planner
