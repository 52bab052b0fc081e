#pragma once

#include <optional>

#include "semnav/mapping/vssm.hpp"

namespace semnav::planner {

using core::GridIndex;
using mapping::VSSM;

struct PlannerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FieldBackend { fmm, dijkstra };

struct FieldConfig {
  double occupancy_threshold = 0.5;
  double goal_snap_radius_m = 0.5;
  /// Cells within this radius of the goal with a clear straight line are
  /// seeded with their exact Euclidean distance, taming the point-source
  /// singularity of the first-order scheme.
  int exact_init_radius_cells = 4;
  FieldBackend backend = FieldBackend::fmm;
  /// Optional early-out: stop marching once every cell within
  /// stop_margin_m of this cell's value has settled.
  std::optional<GridIndex> stop_cell;
  double stop_margin_m = 0.6;
  /// Optional disc carved traversable (the agent's own footprint, so a pose
  /// inside the inflation band can still plan its way out).
  std::optional<std::pair<double, double>> clear_center;
  double clear_radius_m = 0.0;
};

/// Geodesic distance-to-goal field over the map's traversable cells.
struct DistanceField {
  core::Grid2D<double> values;  // meters; +inf on obstacles / unreached
  core::Grid2D<uint8_t> traversable;
  std::vector<GridIndex> goal_cells;
  /// Source cells (goal plus the exact-init band); these carry boundary
  /// values, not upwind solutions.
  std::vector<GridIndex> seeded;
  double resolution = 0.05;
  double origin_x = 0.0, origin_y = 0.0;

  GridIndex world_to_cell(double x, double y) const {
    return {static_cast<int>(std::floor((x - origin_x) / resolution)),
            static_cast<int>(std::floor((y - origin_y) / resolution))};
  }
  std::pair<double, double> cell_center(GridIndex i) const {
    return {origin_x + (i.row + 0.5) * resolution,
            origin_y + (i.col + 0.5) * resolution};
  }
  double at(GridIndex i) const { return values.at(i); }
};

/// Traversability mask: occupied scores below the threshold after disc
/// inflation by the agent radius; unexplored space counts as traversable so
/// frontier goals stay reachable.
core::Grid2D<uint8_t> traversable_mask(const VSSM& map, double agent_radius,
                                       const FieldConfig& config = {});

/// Solves |grad T| = 1 outward from the goal by first-order upwind FMM
/// (or the Dijkstra fallback backend) over the traversable mask.
/// A goal inside an inflated obstacle snaps to the nearest traversable cell
/// within the snap radius; beyond that, PlannerError.
DistanceField compute_field(const VSSM& map, GridIndex goal, double agent_radius,
                            const FieldConfig& config = {});

/// One upwind update from the (final) neighbor values of `cell`; used by the
/// eikonal self-consistency check.
double upwind_update(const DistanceField& field, GridIndex cell);

}  // namespace semnav::planner
