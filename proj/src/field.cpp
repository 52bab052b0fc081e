#include "semnav/planner/field.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace semnav::planner {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double solve_upwind(double a, double b, double h) {
  // a, b: axis minima (either may be +inf, not both).
  if (a > b) std::swap(a, b);
  if (b - a >= h || b == kInf) return a + h;
  return (a + b + std::sqrt(2.0 * h * h - (a - b) * (a - b))) / 2.0;
}

bool line_clear(const core::Grid2D<uint8_t>& traversable, GridIndex from,
                GridIndex to) {
  // Conservative supercover walk between cell centers.
  const int steps = std::max(std::abs(to.row - from.row), std::abs(to.col - from.col)) * 2;
  for (int i = 1; i < steps; ++i) {
    const double t = static_cast<double>(i) / steps;
    const int r = static_cast<int>(std::lround(from.row + (to.row - from.row) * t));
    const int c = static_cast<int>(std::lround(from.col + (to.col - from.col) * t));
    if (!traversable.in_bounds(r, c) || !traversable.at(r, c)) return false;
  }
  return true;
}

}  // namespace

core::Grid2D<uint8_t> traversable_mask(const VSSM& map, double agent_radius,
                                       const FieldConfig& config) {
  const int rows = map.rows(), cols = map.cols();
  const double res = map.resolution();
  core::Grid2D<uint8_t> traversable(rows, cols, 1);

  // Disc offsets for inflation.
  const int reach = static_cast<int>(std::floor(agent_radius / res));
  std::vector<std::pair<int, int>> disc;
  for (int dr = -reach; dr <= reach; ++dr)
    for (int dc = -reach; dc <= reach; ++dc)
      if (std::hypot(dr, dc) * res <= agent_radius) disc.emplace_back(dr, dc);

  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (map.occupied_at({r, c}) < config.occupancy_threshold) continue;
      for (const auto& [dr, dc] : disc) {
        const int nr = r + dr, nc = c + dc;
        if (traversable.in_bounds(nr, nc)) traversable.at(nr, nc) = 0;
      }
    }

  if (config.clear_center && config.clear_radius_m > 0.0) {
    const auto [cx, cy] = *config.clear_center;
    const GridIndex center = map.world_to_cell(cx, cy);
    const int cr = static_cast<int>(std::ceil(config.clear_radius_m / res));
    for (int dr = -cr; dr <= cr; ++dr)
      for (int dc = -cr; dc <= cr; ++dc) {
        const int nr = center.row + dr, nc = center.col + dc;
        if (traversable.in_bounds(nr, nc) &&
            std::hypot(dr, dc) * res <= config.clear_radius_m)
          traversable.at(nr, nc) = 1;
      }
  }
  return traversable;
}

DistanceField compute_field(const VSSM& map, GridIndex goal, double agent_radius,
                            const FieldConfig& config) {
  if (!map.in_bounds(goal))
    throw PlannerError("compute_field: goal outside the map");

  DistanceField field;
  field.resolution = map.resolution();
  field.origin_x = map.origin_x();
  field.origin_y = map.origin_y();
  field.traversable = traversable_mask(map, agent_radius, config);
  const int rows = map.rows(), cols = map.cols();
  field.values = core::Grid2D<double>(rows, cols, kInf);
  const double h = field.resolution;

  // Snap a goal that sits inside the inflated obstacle set.
  GridIndex seed = goal;
  if (!field.traversable.at(goal)) {
    const int reach = static_cast<int>(std::ceil(config.goal_snap_radius_m / h));
    double best = kInf;
    GridIndex best_cell = goal;
    for (int dr = -reach; dr <= reach; ++dr)
      for (int dc = -reach; dc <= reach; ++dc) {
        const GridIndex cand{goal.row + dr, goal.col + dc};
        if (!field.traversable.in_bounds(cand) || !field.traversable.at(cand))
          continue;
        const double d = std::hypot(dr, dc) * h;
        if (d <= config.goal_snap_radius_m && d < best - 1e-12) {
          best = d;
          best_cell = cand;
        }
      }
    if (best == kInf)
      throw PlannerError("compute_field: goal blocked and no traversable cell within snap radius");
    seed = best_cell;
  }
  field.goal_cells = {seed};

  using Entry = std::pair<double, size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  core::Grid2D<uint8_t> settled(rows, cols, 0);

  auto push = [&](GridIndex cell, double value) {
    if (value < field.values.at(cell)) {
      field.values.at(cell) = value;
      heap.emplace(value, field.values.index_of(cell.row, cell.col));
    }
  };

  push(seed, 0.0);
  field.seeded.push_back(seed);
  if (config.backend == FieldBackend::fmm && config.exact_init_radius_cells > 0) {
    const int r0 = config.exact_init_radius_cells;
    for (int dr = -r0; dr <= r0; ++dr)
      for (int dc = -r0; dc <= r0; ++dc) {
        const GridIndex cell{seed.row + dr, seed.col + dc};
        if (!field.traversable.in_bounds(cell) || !field.traversable.at(cell))
          continue;
        const double d = std::hypot(dr, dc);
        if (d > r0 || (dr == 0 && dc == 0)) continue;
        if (!line_clear(field.traversable, seed, cell)) continue;
        push(cell, d * h);
        field.seeded.push_back(cell);
      }
  }

  constexpr int dr8[] = {1, -1, 0, 0, 1, 1, -1, -1};
  constexpr int dc8[] = {0, 0, 1, -1, 1, -1, 1, -1};
  const double sqrt2 = std::sqrt(2.0);

  double stop_value = kInf;
  while (!heap.empty()) {
    const auto [value, index] = heap.top();
    heap.pop();
    const GridIndex cell = field.values.index_to_cell(index);
    if (settled.at(cell)) continue;
    if (value > field.values.at(cell)) continue;
    settled.at(cell) = 1;
    if (config.stop_cell && cell == *config.stop_cell)
      stop_value = value + config.stop_margin_m;
    if (value > stop_value) break;

    if (config.backend == FieldBackend::fmm) {
      for (int k = 0; k < 4; ++k) {
        const GridIndex next{cell.row + dr8[k], cell.col + dc8[k]};
        if (!field.traversable.in_bounds(next) || !field.traversable.at(next) ||
            settled.at(next))
          continue;
        // Upwind update from settled axis minima.
        auto settled_min = [&](int ar, int ac, int br, int bc) {
          double m = kInf;
          if (settled.in_bounds(ar, ac) && settled.at(ar, ac))
            m = std::min(m, field.values.at(ar, ac));
          if (settled.in_bounds(br, bc) && settled.at(br, bc))
            m = std::min(m, field.values.at(br, bc));
          return m;
        };
        const double a = settled_min(next.row - 1, next.col, next.row + 1, next.col);
        const double b = settled_min(next.row, next.col - 1, next.row, next.col + 1);
        if (a == kInf && b == kInf) continue;
        push(next, solve_upwind(a, b, h));
      }
    } else {
      for (int k = 0; k < 8; ++k) {
        const GridIndex next{cell.row + dr8[k], cell.col + dc8[k]};
        if (!field.traversable.in_bounds(next) || !field.traversable.at(next) ||
            settled.at(next))
          continue;
        if (k >= 4) {
          if (!field.traversable.at(cell.row + dr8[k], cell.col) ||
              !field.traversable.at(cell.row, cell.col + dc8[k]))
            continue;
        }
        push(next, value + (k >= 4 ? sqrt2 : 1.0) * h);
      }
    }
  }
  return field;
}

double upwind_update(const DistanceField& field, GridIndex cell) {
  auto axis_min = [&](int ar, int ac, int br, int bc) {
    double m = kInf;
    if (field.values.in_bounds(ar, ac)) m = std::min(m, field.values.at(ar, ac));
    if (field.values.in_bounds(br, bc)) m = std::min(m, field.values.at(br, bc));
    return m;
  };
  const double a = axis_min(cell.row - 1, cell.col, cell.row + 1, cell.col);
  const double b = axis_min(cell.row, cell.col - 1, cell.row, cell.col + 1);
  if (a == kInf && b == kInf) return kInf;
  return solve_upwind(a, b, field.resolution);
}

}  // namespace semnav::planner
