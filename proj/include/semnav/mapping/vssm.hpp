#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semnav/core/grid.hpp"
#include "semnav/perception/detection.hpp"

namespace semnav::mapping {

using core::CameraIntrinsics;
using core::GridIndex;
using core::ObjectLabel;
using core::Pose;
using perception::Detection;
using sim::Observation;

enum class Fusion { max_score, decay };

struct MapConfig {
  double resolution = 0.05;  // meters per cell
  double size_m = 48.0;      // square extent centered on the episode start
  double obstacle_min_height = 0.1;   // lower edge of the obstacle band
  double obstacle_max_height = 0.88;  // upper edge (agent height)
  double max_range = 10.0;            // rays truncate here
  Fusion fusion = Fusion::max_score;
  double decay_alpha = 0.7;  // only used by Fusion::decay
};

/// Result of a goal-location query: the centroid cell of the chosen
/// suprathreshold component plus the component itself.
struct GoalLocation {
  GridIndex cell;
  std::vector<GridIndex> blob;
  int channel = -1;
  float score = 0.0f;
};

/// Top-down semantic score map: a growable stack of per-label score grids
/// plus occupied and explored channels, every value in [0, 1]. Scores fuse
/// by per-cell max (monotone under repeated observation).
class VSSM {
 public:
  VSSM(const MapConfig& config, double center_x, double center_y);

  int rows() const { return occupied_.rows(); }
  int cols() const { return occupied_.cols(); }
  double resolution() const { return config_.resolution; }
  double origin_x() const { return origin_x_; }
  double origin_y() const { return origin_y_; }
  const MapConfig& config() const { return config_; }

  bool in_bounds(GridIndex i) const { return occupied_.in_bounds(i); }
  GridIndex world_to_cell(double x, double y) const {
    return {static_cast<int>(std::floor((x - origin_x_) / config_.resolution)),
            static_cast<int>(std::floor((y - origin_y_) / config_.resolution))};
  }
  std::pair<double, double> cell_center(GridIndex i) const {
    return {origin_x_ + (i.row + 0.5) * config_.resolution,
            origin_y_ + (i.col + 0.5) * config_.resolution};
  }

  // Channel registry. Channels are keyed by the label's rendered phrase so
  // "red chair" and "chair" stay distinct.
  int channel_count() const { return static_cast<int>(channels_.size()); }
  std::optional<int> find_channel(const std::string& phrase) const;
  const ObjectLabel& channel_label(int index) const { return channels_[index]; }

  /// Registers a new semantic channel (zero-initialized grid). Throws
  /// std::invalid_argument if the phrase is already registered.
  int add_channel(const ObjectLabel& label);

  float semantic_at(int channel, GridIndex i) const { return semantic_[channel].at(i); }
  float occupied_at(GridIndex i) const { return occupied_.at(i); }
  float explored_at(GridIndex i) const { return explored_.at(i); }
  const core::Grid2D<float>& occupied_grid() const { return occupied_; }
  const core::Grid2D<float>& explored_grid() const { return explored_; }
  const core::Grid2D<float>& semantic_grid(int channel) const { return semantic_[channel]; }

  /// Writes one occupied-channel value directly (collision feedback path).
  void mark_occupied(GridIndex i, float score = 1.0f);

  /// Folds one timestep into the map: semantic max-fusion of the detections'
  /// projected masks, obstacle-band occupancy from every finite-depth pixel,
  /// and explored marking along every cast ray (2D DDA).
  void update(const std::vector<Detection>& detections, const Observation& obs,
              const CameraIntrinsics& camera);

  /// Highest-scoring goal label with any cell >= threshold; within that
  /// label the largest 8-connected component wins and its centroid cell is
  /// returned. Empty when no goal label reaches the threshold.
  std::optional<GoalLocation> locate_goal(const std::vector<ObjectLabel>& goals,
                                          double threshold) const;

  /// Per-channel max score within a disc; labels reaching the threshold,
  /// sorted by score descending (ties by registration order).
  std::vector<std::pair<ObjectLabel, float>> objects_near(GridIndex cell,
                                                          double radius_m,
                                                          double threshold) const;

  std::vector<uint8_t> serialize() const;
  static VSSM deserialize(const std::vector<uint8_t>& bytes, const MapConfig& config);

  bool operator==(const VSSM& other) const;

 private:
  void fuse(core::Grid2D<float>& grid, GridIndex cell, float score);

  MapConfig config_;
  double origin_x_, origin_y_;
  std::vector<ObjectLabel> channels_;
  std::map<std::string, int> channel_index_;
  std::vector<core::Grid2D<float>> semantic_;
  core::Grid2D<float> occupied_;
  core::Grid2D<float> explored_;
};

/// Back-projects mask pixels with finite depth through the pinhole model
/// (ray length times the unit pixel ray), drops them to the floor plane and
/// bins them to map cells; out-of-map or out-of-range pixels are skipped.
/// Points are nudged a quarter cell along the ray so surface hits land
/// inside the matter they belong to. Returns sorted unique cells.
std::vector<GridIndex> project_mask(const core::Grid2D<float>& depth,
                                    const std::vector<int>& mask,
                                    const Pose& pose,
                                    const CameraIntrinsics& camera,
                                    const VSSM& map);

}  // namespace semnav::mapping
