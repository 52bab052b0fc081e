#include "semnav/sim/paths.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <set>

namespace semnav::sim {

std::vector<GridIndex> goal_cells(const SceneSpec& scene) {
  std::set<GridIndex> cells;
  for (const auto* inst : scene.goal_instances())
    cells.insert(inst->cells.begin(), inst->cells.end());
  return {cells.begin(), cells.end()};
}

double shortest_path_length(const SceneSpec& scene, const Pose& start,
                            const std::vector<ObjectLabel>& goal_labels,
                            double success_radius) {
  SceneSpec query = scene;
  query.goal_labels = goal_labels;
  const auto blocked = query.blocked_grid();
  const int rows = blocked.rows(), cols = blocked.cols();
  const double res = query.resolution;

  // Free cells whose center is within the success radius of a goal cell.
  core::Grid2D<uint8_t> target(rows, cols, 0);
  const int reach = static_cast<int>(std::ceil(success_radius / res));
  bool any_target = false;
  for (const auto& g : goal_cells(query)) {
    for (int dr = -reach; dr <= reach; ++dr) {
      for (int dc = -reach; dc <= reach; ++dc) {
        const GridIndex cell{g.row + dr, g.col + dc};
        if (!blocked.in_bounds(cell) || blocked.at(cell) != 0) continue;
        const double d = std::hypot(dr * res, dc * res);
        if (d <= success_radius + 1e-12) {
          target.at(cell) = 1;
          any_target = true;
        }
      }
    }
  }
  if (!any_target) throw SceneError("shortest_path_length: no free cell near a goal");

  const GridIndex start_cell = query.world_to_cell(start.x, start.y);
  if (!blocked.in_bounds(start_cell) || blocked.at(start_cell) != 0)
    throw SceneError("shortest_path_length: start cell blocked");
  if (target.at(start_cell)) return 0.0;

  core::Grid2D<double> dist(rows, cols, std::numeric_limits<double>::infinity());
  using Entry = std::pair<double, size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist.at(start_cell) = 0.0;
  heap.emplace(0.0, blocked.index_of(start_cell.row, start_cell.col));

  constexpr int dr8[] = {1, -1, 0, 0, 1, 1, -1, -1};
  constexpr int dc8[] = {0, 0, 1, -1, 1, -1, 1, -1};
  const double sqrt2 = std::sqrt(2.0);

  while (!heap.empty()) {
    auto [d, idx] = heap.top();
    heap.pop();
    const GridIndex cur = blocked.index_to_cell(idx);
    if (d > dist.at(cur)) continue;
    if (target.at(cur)) return d;
    for (int k = 0; k < 8; ++k) {
      const GridIndex next{cur.row + dr8[k], cur.col + dc8[k]};
      if (!blocked.in_bounds(next) || blocked.at(next) != 0) continue;
      if (k >= 4) {
        // No corner cutting: both orthogonal neighbors must be free.
        if (blocked.at(cur.row + dr8[k], cur.col) != 0 ||
            blocked.at(cur.row, cur.col + dc8[k]) != 0)
          continue;
      }
      const double nd = d + (k >= 4 ? sqrt2 : 1.0) * res;
      if (nd < dist.at(next)) {
        dist.at(next) = nd;
        heap.emplace(nd, blocked.index_of(next.row, next.col));
      }
    }
  }
  throw SceneError("shortest_path_length: goal region unreachable");
}

namespace {

/// Walks the cells crossed by the segment (x0,y0)->(x1,y1); calls visit for
/// every cell strictly between the endpoints' cells. Returns false if visit
/// ever returns false.
bool walk_segment(const SceneSpec& scene, double x0, double y0, double x1,
                  double y1, const std::function<bool(GridIndex)>& visit) {
  const double res = scene.resolution;
  const GridIndex first = scene.world_to_cell(x0, y0);
  const GridIndex last = scene.world_to_cell(x1, y1);
  const double dx = x1 - x0, dy = y1 - y0;
  const double len = std::hypot(dx, dy);
  if (len < 1e-12) return true;
  const double ux = dx / len, uy = dy / len;

  int r = first.row, c = first.col;
  const int step_r = ux > 0.0 ? 1 : -1;
  const int step_c = uy > 0.0 ? 1 : -1;
  const double t_delta_r = ux != 0.0 ? res / std::abs(ux) : INFINITY;
  const double t_delta_c = uy != 0.0 ? res / std::abs(uy) : INFINITY;
  double t_max_r = INFINITY, t_max_c = INFINITY;
  if (ux != 0.0) t_max_r = ((ux > 0.0 ? (r + 1) * res : r * res) - x0) / ux;
  if (uy != 0.0) t_max_c = ((uy > 0.0 ? (c + 1) * res : c * res) - y0) / uy;

  for (;;) {
    if (std::min(t_max_r, t_max_c) >= len) return true;  // reached last cell
    if (t_max_r <= t_max_c) {
      r += step_r;
      t_max_r += t_delta_r;
    } else {
      c += step_c;
      t_max_c += t_delta_c;
    }
    if (r == last.row && c == last.col) return true;
    if (!visit({r, c})) return false;
  }
}

}  // namespace

bool is_success(const SceneSpec& scene, const Pose& pose,
                double success_radius) {
  const auto instances = scene.goal_instances();
  if (instances.empty()) return false;

  // Cells belonging to any goal instance never occlude.
  std::set<GridIndex> goal_cell_set;
  for (const auto* inst : instances)
    goal_cell_set.insert(inst->cells.begin(), inst->cells.end());

  core::Grid2D<uint8_t> occluder = scene.occupancy;
  for (const auto& obj : scene.objects)
    for (const auto& cell : obj.cells)
      if (occluder.in_bounds(cell) && !goal_cell_set.count(cell))
        occluder.at(cell) = 1;

  std::vector<std::pair<double, GridIndex>> candidates;
  for (const auto& cell : goal_cell_set) {
    const auto [cx, cy] = scene.cell_center(cell);
    const double d = std::hypot(cx - pose.x, cy - pose.y);
    if (d <= success_radius + 1e-9) candidates.emplace_back(d, cell);
  }
  std::sort(candidates.begin(), candidates.end());

  for (const auto& [d, cell] : candidates) {
    const auto [cx, cy] = scene.cell_center(cell);
    const bool clear = walk_segment(
        scene, pose.x, pose.y, cx, cy, [&](GridIndex mid) {
          return !(occluder.in_bounds(mid) && occluder.at(mid) != 0);
        });
    if (clear) return true;
  }
  return false;
}

}  // namespace semnav::sim
