#pragma once

#include <limits>

#include "semnav/core/grid.hpp"
#include "semnav/sim/scene.hpp"

namespace semnav::sim {

using core::CameraIntrinsics;

enum class HitKind : int8_t { none = 0, floor = 1, ceiling = 2, wall = 3, object = 4 };

/// Per-pixel render result: ray length to first intersection (meters,
/// +inf when nothing is hit within max_range) plus what was hit.
struct RenderedFrame {
  core::Grid2D<float> depth;
  core::Grid2D<int8_t> kind;        // HitKind
  core::Grid2D<int32_t> object_id;  // index into scene.objects, -1 otherwise

  HitKind kind_at(int v, int u) const { return static_cast<HitKind>(kind.at(v, u)); }
};

/// Per-cell column lookup derived from a scene (walls + object columns).
struct ColumnGrid {
  core::Grid2D<float> height;   // 0 where no column
  core::Grid2D<int32_t> id;     // -1 free, -2 wall, >=0 object index

  static ColumnGrid build(const SceneSpec& scene);
};

/// World-frame unit ray direction through pixel (u, v).
/// Camera convention: x right, y down, z forward (optical axis).
std::array<double, 3> pixel_ray(const Pose& pose, const CameraIntrinsics& K,
                                double u, double v);

/// Casts one ray; returns ray length to the first hit (or +inf) and fills
/// kind/object. 2.5D DDA over the floor-plane grid with analytic z tests.
double cast_ray(const SceneSpec& scene, const ColumnGrid& columns,
                const Pose& origin, const std::array<double, 3>& dir,
                double max_range, HitKind* kind, int32_t* object_id);

/// Renders a full frame by raycasting every pixel.
RenderedFrame render_frame(const SceneSpec& scene, const ColumnGrid& columns,
                           const Pose& pose, const CameraIntrinsics& K,
                           double max_range);

/// Depth-only convenience (builds the column grid internally).
core::Grid2D<float> render_depth(const SceneSpec& scene, const Pose& pose,
                                 const CameraIntrinsics& K,
                                 double max_range = 10.0);

/// Ground-truth pixel masks, one per visible object; pixels are row-major
/// indices (v * width + u). Masks are disjoint by construction.
std::vector<std::pair<ObjectLabel, std::vector<int>>> ground_truth_masks(
    const SceneSpec& scene, const Pose& pose, const CameraIntrinsics& K,
    double max_range = 10.0);

}  // namespace semnav::sim
