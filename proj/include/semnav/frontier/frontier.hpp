#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semnav/mapping/vssm.hpp"

namespace semnav::frontier {

using core::GridIndex;
using core::ObjectLabel;
using mapping::VSSM;

/// A cluster of explored free cells bordering unexplored space.
struct Frontier {
  GridIndex centroid;  // member cell nearest the cluster mean
  std::vector<GridIndex> cells;
  int size = 0;
  std::vector<std::pair<ObjectLabel, float>> nearby_objects;
  std::string summary;
};

struct FrontierConfig {
  int min_cluster_size = 5;
  double occupancy_threshold = 0.5;
  double explored_threshold = 0.5;
  double query_radius_m = 2.0;
  double query_threshold = 0.55;
  int max_frontiers = 8;
  /// When set, clusters not reachable from this cell through explored free
  /// space are dropped.
  std::optional<GridIndex> agent_cell;
};

/// Frontier predicate per cell: explored, occupancy score below the
/// threshold, and 4-adjacent to at least one unexplored cell. Qualifying
/// cells are clustered 8-connected; clusters below the minimum size are
/// discarded and the rest are returned sorted by size descending, capped at
/// max_frontiers.
std::vector<Frontier> sample_frontiers(const VSSM& map, const FrontierConfig& config);

/// Renders the reasoning summary, labels ordered by score descending:
///   "This area contains A, B and C." / "This area contains A."
///   "This area contains nothing recognizable."
std::string describe(const Frontier& frontier);

}  // namespace semnav::frontier
