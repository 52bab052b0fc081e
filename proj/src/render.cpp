#include "semnav/sim/render.hpp"

#include <array>
#include <cmath>

namespace semnav::sim {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ColumnGrid ColumnGrid::build(const SceneSpec& scene) {
  ColumnGrid g;
  g.height = core::Grid2D<float>(scene.rows(), scene.cols(), 0.0f);
  g.id = core::Grid2D<int32_t>(scene.rows(), scene.cols(), -1);
  for (size_t i = 0; i < scene.objects.size(); ++i) {
    const auto& obj = scene.objects[i];
    for (const auto& cell : obj.cells) {
      if (!g.height.in_bounds(cell)) continue;
      if (obj.height > g.height.at(cell)) {
        g.height.at(cell) = static_cast<float>(obj.height);
        g.id.at(cell) = static_cast<int32_t>(i);
      }
    }
  }
  // Walls dominate anything sharing the cell.
  for (int r = 0; r < scene.rows(); ++r) {
    for (int c = 0; c < scene.cols(); ++c) {
      if (scene.occupancy.at(r, c)) {
        g.height.at(r, c) = static_cast<float>(scene.ceiling_height);
        g.id.at(r, c) = -2;
      }
    }
  }
  return g;
}

std::array<double, 3> pixel_ray(const Pose& pose, const CameraIntrinsics& K,
                                double u, double v) {
  const double a = (u - K.cx) / K.fx;
  const double b = (v - K.cy) / K.fy;
  const double cy = std::cos(pose.yaw), sy = std::sin(pose.yaw);
  const double cp = std::cos(pose.pitch), sp = std::sin(pose.pitch);
  // Orthonormal camera triad in the world frame (no roll).
  const double fwd[3] = {cp * cy, cp * sy, sp};
  const double right[3] = {sy, -cy, 0.0};
  const double down[3] = {sp * cy, sp * sy, -cp};
  std::array<double, 3> d{a * right[0] + b * down[0] + fwd[0],
                          a * right[1] + b * down[1] + fwd[1],
                          a * right[2] + b * down[2] + fwd[2]};
  const double n = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
  return {d[0] / n, d[1] / n, d[2] / n};
}

double cast_ray(const SceneSpec& scene, const ColumnGrid& columns,
                const Pose& origin, const std::array<double, 3>& dir,
                double max_range, HitKind* kind, int32_t* object_id) {
  *kind = HitKind::none;
  *object_id = -1;
  const double res = scene.resolution;
  const double z0 = origin.z;
  const double dz = dir[2];

  // Analytic floor / ceiling intersection distances (ray-length units).
  const double t_floor = dz < 0.0 ? -z0 / dz : kInf;
  const double t_ceil = dz > 0.0 ? (scene.ceiling_height - z0) / dz : kInf;
  const double t_plane = std::min(t_floor, t_ceil);

  int r = static_cast<int>(std::floor(origin.x / res));
  int c = static_cast<int>(std::floor(origin.y / res));

  const int step_r = dir[0] > 0.0 ? 1 : -1;
  const int step_c = dir[1] > 0.0 ? 1 : -1;
  const double t_delta_r = dir[0] != 0.0 ? res / std::abs(dir[0]) : kInf;
  const double t_delta_c = dir[1] != 0.0 ? res / std::abs(dir[1]) : kInf;
  double t_max_r = kInf, t_max_c = kInf;
  if (dir[0] != 0.0) {
    const double edge = (dir[0] > 0.0 ? (r + 1) * res : r * res);
    t_max_r = (edge - origin.x) / dir[0];
  }
  if (dir[1] != 0.0) {
    const double edge = (dir[1] > 0.0 ? (c + 1) * res : c * res);
    t_max_c = (edge - origin.y) / dir[1];
  }

  double t_in = 0.0;
  for (;;) {
    const double t_out = std::min(t_max_r, t_max_c);
    const double t_limit = std::min({t_out, t_plane, max_range});

    if (columns.height.in_bounds(r, c)) {
      const double col_h = columns.height.at(r, c);
      if (col_h > 0.0) {
        const double z_in = z0 + dz * t_in;
        double t_hit = kInf;
        if (z_in >= 0.0 && z_in <= col_h) {
          t_hit = t_in;  // side face (or starting inside the column region)
        } else if (z_in > col_h && dz < 0.0) {
          const double t_top = (col_h - z0) / dz;  // descending onto the top face
          if (t_top >= t_in && t_top <= t_limit) t_hit = t_top;
        }
        if (t_hit <= t_limit) {
          const int32_t id = columns.id.at(r, c);
          *kind = id == -2 ? HitKind::wall : HitKind::object;
          *object_id = id >= 0 ? id : -1;
          return t_hit;
        }
      }
    } else if (t_in > 0.0) {
      // Left the grid without hitting anything solid.
      if (t_plane <= max_range) {
        *kind = t_plane == t_floor ? HitKind::floor : HitKind::ceiling;
        return t_plane;
      }
      return kInf;
    }

    if (t_plane <= std::min(t_out, max_range)) {
      *kind = t_plane == t_floor ? HitKind::floor : HitKind::ceiling;
      return t_plane;
    }
    if (t_out > max_range) return kInf;

    t_in = t_out;
    if (t_max_r <= t_max_c) {
      r += step_r;
      t_max_r += t_delta_r;
    } else {
      c += step_c;
      t_max_c += t_delta_c;
    }
  }
}

RenderedFrame render_frame(const SceneSpec& scene, const ColumnGrid& columns,
                           const Pose& pose, const CameraIntrinsics& K,
                           double max_range) {
  RenderedFrame frame;
  frame.depth = core::Grid2D<float>(K.height, K.width,
                                    std::numeric_limits<float>::infinity());
  frame.kind = core::Grid2D<int8_t>(K.height, K.width,
                                    static_cast<int8_t>(HitKind::none));
  frame.object_id = core::Grid2D<int32_t>(K.height, K.width, -1);
  for (int v = 0; v < K.height; ++v) {
    for (int u = 0; u < K.width; ++u) {
      const auto dir = pixel_ray(pose, K, u, v);
      HitKind kind;
      int32_t id;
      const double t = cast_ray(scene, columns, pose, dir, max_range, &kind, &id);
      if (std::isfinite(t)) {
        frame.depth.at(v, u) = static_cast<float>(t);
        frame.kind.at(v, u) = static_cast<int8_t>(kind);
        frame.object_id.at(v, u) = id;
      }
    }
  }
  return frame;
}

core::Grid2D<float> render_depth(const SceneSpec& scene, const Pose& pose,
                                 const CameraIntrinsics& K, double max_range) {
  const auto columns = ColumnGrid::build(scene);
  return render_frame(scene, columns, pose, K, max_range).depth;
}

std::vector<std::pair<ObjectLabel, std::vector<int>>> ground_truth_masks(
    const SceneSpec& scene, const Pose& pose, const CameraIntrinsics& K,
    double max_range) {
  const auto columns = ColumnGrid::build(scene);
  const auto frame = render_frame(scene, columns, pose, K, max_range);
  std::vector<std::vector<int>> pixels(scene.objects.size());
  for (int v = 0; v < K.height; ++v)
    for (int u = 0; u < K.width; ++u) {
      const int32_t id = frame.object_id.at(v, u);
      if (id >= 0) pixels[id].push_back(v * K.width + u);
    }
  std::vector<std::pair<ObjectLabel, std::vector<int>>> out;
  for (size_t i = 0; i < pixels.size(); ++i)
    if (!pixels[i].empty())
      out.emplace_back(scene.objects[i].label, std::move(pixels[i]));
  return out;
}

}  // namespace semnav::sim
