#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "semnav/core/grid.hpp"
#include "semnav/core/types.hpp"

namespace semnav::sim {

using core::GridIndex;
using core::ObjectLabel;
using core::Pose;

/// A placed object instance: a set of grid cells forming a vertical column
/// of the given height.
struct SceneObject {
  ObjectLabel label;
  std::vector<GridIndex> cells;  // sorted, unique
  double height = 0.5;           // meters above floor
};

/// A 2.5D scene: walls are full-height columns on occupied cells, objects
/// are columns of their own height, floor at z=0 and a flat ceiling.
/// Cell (r, c) spans world x in [r*res, (r+1)*res), y in [c*res, (c+1)*res).
struct SceneSpec {
  double resolution = 0.05;     // meters per cell
  double ceiling_height = 2.5;  // meters
  core::Grid2D<uint8_t> occupancy;  // 1 = wall column
  std::vector<SceneObject> objects;
  Pose start;
  std::vector<ObjectLabel> goal_labels;  // evaluation ground truth only

  int rows() const { return occupancy.rows(); }
  int cols() const { return occupancy.cols(); }

  GridIndex world_to_cell(double x, double y) const {
    return {static_cast<int>(std::floor(x / resolution)),
            static_cast<int>(std::floor(y / resolution))};
  }
  /// World coordinates of a cell center.
  std::pair<double, double> cell_center(GridIndex i) const {
    return {(i.row + 0.5) * resolution, (i.col + 0.5) * resolution};
  }

  bool is_wall(GridIndex i) const {
    return !occupancy.in_bounds(i) || occupancy.at(i) != 0;
  }

  /// Cells blocked for motion: walls plus object footprints.
  /// Built lazily by blocked_grid().
  core::Grid2D<uint8_t> blocked_grid() const;

  /// Object instances whose label name matches a goal label
  /// (attribute subset match).
  std::vector<const SceneObject*> goal_instances() const;
};

struct SceneError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses and validates a scene file (JSON, format_version 1).
/// Throws SceneError on parse failures, a start pose inside a blocked cell,
/// missing goal instances, or goals unreachable from the start.
SceneSpec load_scene(const std::filesystem::path& path);

/// Serializes a scene; save/load round-trips are byte-identical.
void save_scene(const SceneSpec& scene, const std::filesystem::path& path);

std::string scene_to_string(const SceneSpec& scene);
SceneSpec scene_from_string(const std::string& text);

/// Validation used by load_scene; throws SceneError on violations.
void validate_scene(const SceneSpec& scene);

/// True iff `goal` is reachable from `from` over unblocked cells (4-connected).
bool cells_connected(const core::Grid2D<uint8_t>& blocked, GridIndex from,
                     GridIndex goal);

}  // namespace semnav::sim
