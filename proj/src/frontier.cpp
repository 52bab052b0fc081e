#include "semnav/frontier/frontier.hpp"

#include <algorithm>
#include <deque>

namespace semnav::frontier {

std::vector<Frontier> sample_frontiers(const VSSM& map, const FrontierConfig& config) {
  const int rows = map.rows(), cols = map.cols();

  auto explored = [&](int r, int c) {
    return map.explored_at({r, c}) >= config.explored_threshold;
  };
  auto occupied = [&](int r, int c) {
    return map.occupied_at({r, c}) >= config.occupancy_threshold;
  };

  core::Grid2D<uint8_t> is_frontier(rows, cols, 0);
  constexpr int dr4[] = {1, -1, 0, 0};
  constexpr int dc4[] = {0, 0, 1, -1};
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (!explored(r, c) || occupied(r, c)) continue;
      for (int k = 0; k < 4; ++k) {
        const int nr = r + dr4[k], nc = c + dc4[k];
        if (map.in_bounds({nr, nc}) && !explored(nr, nc)) {
          is_frontier.at(r, c) = 1;
          break;
        }
      }
    }
  }

  // Reachability filter: flood fill through explored free cells.
  core::Grid2D<uint8_t> reachable(rows, cols, 0);
  bool filter = false;
  if (config.agent_cell && map.in_bounds(*config.agent_cell)) {
    filter = true;
    std::deque<GridIndex> queue{*config.agent_cell};
    reachable.at(*config.agent_cell) = 1;
    while (!queue.empty()) {
      const GridIndex cur = queue.front();
      queue.pop_front();
      for (int dr = -1; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc) {
          const GridIndex next{cur.row + dr, cur.col + dc};
          if (!map.in_bounds(next) || reachable.at(next)) continue;
          if (!explored(next.row, next.col) || occupied(next.row, next.col)) continue;
          reachable.at(next) = 1;
          queue.push_back(next);
        }
    }
  }

  // 8-connected clustering.
  std::vector<Frontier> frontiers;
  core::Grid2D<uint8_t> seen(rows, cols, 0);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (!is_frontier.at(r, c) || seen.at(r, c)) continue;
      std::vector<GridIndex> cells;
      std::deque<GridIndex> queue{{r, c}};
      seen.at(r, c) = 1;
      while (!queue.empty()) {
        const GridIndex cur = queue.front();
        queue.pop_front();
        cells.push_back(cur);
        for (int dr = -1; dr <= 1; ++dr)
          for (int dc = -1; dc <= 1; ++dc) {
            const GridIndex next{cur.row + dr, cur.col + dc};
            if (!map.in_bounds(next) || seen.at(next) || !is_frontier.at(next))
              continue;
            seen.at(next) = 1;
            queue.push_back(next);
          }
      }
      if (static_cast<int>(cells.size()) < config.min_cluster_size) continue;
      if (filter) {
        bool any_reachable = false;
        for (const auto& cell : cells)
          if (reachable.at(cell)) {
            any_reachable = true;
            break;
          }
        if (!any_reachable) continue;
      }

      Frontier f;
      std::sort(cells.begin(), cells.end());
      double mr = 0.0, mc = 0.0;
      for (const auto& cell : cells) {
        mr += cell.row;
        mc += cell.col;
      }
      mr /= cells.size();
      mc /= cells.size();
      double best_d = INFINITY;
      for (const auto& cell : cells) {
        const double d =
            (cell.row - mr) * (cell.row - mr) + (cell.col - mc) * (cell.col - mc);
        if (d < best_d - 1e-12) {
          best_d = d;
          f.centroid = cell;
        }
      }
      f.size = static_cast<int>(cells.size());
      f.cells = std::move(cells);
      f.nearby_objects =
          map.objects_near(f.centroid, config.query_radius_m, config.query_threshold);
      frontiers.push_back(std::move(f));
    }
  }

  std::stable_sort(frontiers.begin(), frontiers.end(),
                   [](const Frontier& a, const Frontier& b) {
                     if (a.size != b.size) return a.size > b.size;
                     return a.centroid < b.centroid;
                   });
  if (static_cast<int>(frontiers.size()) > config.max_frontiers)
    frontiers.resize(config.max_frontiers);
  for (auto& f : frontiers) f.summary = describe(f);
  return frontiers;
}

std::string describe(const Frontier& frontier) {
  const auto& objs = frontier.nearby_objects;
  if (objs.empty()) return "This area contains nothing recognizable.";
  std::string s = "This area contains ";
  for (size_t i = 0; i < objs.size(); ++i) {
    if (i > 0) s += (i + 1 == objs.size()) ? " and " : ", ";
    s += objs[i].first.phrase();
  }
  s += ".";
  return s;
}

}  // namespace semnav::frontier
