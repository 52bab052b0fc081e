#include "semnav/sim/scene_gen.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "semnav/core/rng.hpp"

namespace semnav::sim {

using core::GridIndex;
using core::Rng;

const std::vector<RoomTemplate>& default_room_templates() {
  static const std::vector<RoomTemplate> kTemplates = {
      {"living",
       {{"couch", 1.0}, {"tv", 0.95}, {"plant", 0.7}, {"painting", 0.6}, {"chair", 0.5}}},
      {"bedroom",
       {{"bed", 1.0}, {"painting", 0.5}, {"tv", 0.45}, {"trashcan", 0.4}, {"chair", 0.35}}},
      {"bathroom",
       {{"toilet", 1.0}, {"bathtub", 0.95}, {"sink", 0.8}, {"towel", 0.7},
        {"shower", 0.45}, {"tap", 0.35}}},
      {"kitchen",
       {{"refrigerator", 1.0}, {"trashcan", 0.7}, {"sink", 0.5}, {"chair", 0.5}, {"tap", 0.3}}},
      {"study",
       {{"desk", 1.0}, {"chair", 0.9}, {"painting", 0.5}, {"plant", 0.5}, {"trashcan", 0.4}}},
      {"hallway", {{"stairs", 0.6}, {"painting", 0.5}, {"plant", 0.5}}},
  };
  return kTemplates;
}

const std::vector<AnchorRule>& default_anchor_rules() {
  static const std::vector<AnchorRule> kAnchors = {
      {"bathtub", "toilet", 2.0},
      {"towel", "bathtub", 1.5},
      {"tap", "sink", 0.8},
      {"soap", "sink", 0.8},
      {"chair", "desk", 1.5},
      {"trashcan", "desk", 1.5},
  };
  return kAnchors;
}

ObjectShape object_shape(const std::string& name) {
  static const std::map<std::string, ObjectShape> kShapes = {
      {"bed", {2.0, 1.5, 0.6}},       {"couch", {1.8, 0.9, 0.8}},
      {"toilet", {0.5, 0.7, 0.8}},    {"bathtub", {1.6, 0.8, 0.6}},
      {"shower", {0.9, 0.9, 2.2}},    {"sink", {0.6, 0.5, 0.9}},
      {"towel", {0.6, 0.15, 1.2}},    {"painting", {0.9, 0.15, 1.8}},
      {"tv", {1.0, 0.25, 1.1}},       {"plant", {0.4, 0.4, 1.2}},
      {"chair", {0.5, 0.5, 0.9}},     {"desk", {1.3, 0.7, 0.75}},
      {"refrigerator", {0.7, 0.7, 1.8}}, {"trashcan", {0.35, 0.35, 0.5}},
      {"stairs", {1.0, 2.2, 1.4}},    {"tap", {0.15, 0.15, 1.0}},
      {"soap", {0.1, 0.1, 0.95}},
  };
  auto it = kShapes.find(name);
  if (it != kShapes.end()) return it->second;
  return {0.5, 0.5, 0.8};
}

namespace {

struct Room {
  int r0, r1, c0, c1;  // interior cell range, inclusive
  std::string type;
  int grid_x, grid_y;  // position in the room layout grid
};

struct Placed {
  std::string name;
  int side;          // 0 = r0 wall, 1 = r1 wall, 2 = c0 wall, 3 = c1 wall
  int off;           // first along-wall cell
  int width_cells;
  std::vector<GridIndex> cells;
};

int to_cells(double meters, double res) {
  return std::max(1, static_cast<int>(std::lround(meters / res)));
}

/// Footprint cells for an object of w x d cells against a room wall.
std::vector<GridIndex> footprint(const Room& room, int side, int off, int w, int d) {
  std::vector<GridIndex> cells;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < w; ++j) {
      switch (side) {
        case 0: cells.push_back({room.r0 + i, off + j}); break;
        case 1: cells.push_back({room.r1 - i, off + j}); break;
        case 2: cells.push_back({off + j, room.c0 + i}); break;
        case 3: cells.push_back({off + j, room.c1 - i}); break;
      }
    }
  }
  return cells;
}

}  // namespace

SceneSpec generate_scene(uint64_t seed, const GeneratorParams& params) {
  if (params.rooms < 1) throw SceneError("generate_scene: rooms must be >= 1");
  const auto& templates =
      params.templates.empty() ? default_room_templates() : params.templates;
  const auto& anchors =
      params.anchors.empty() ? default_anchor_rules() : params.anchors;
  if (templates.empty()) throw SceneError("generate_scene: no room templates");

  const double res = params.resolution;
  const int wall = 2;  // wall thickness in cells

  // The generator retries whole layouts on the rare validation failure;
  // every retry derives deterministically from the caller's seed.
  for (uint64_t attempt = 0; attempt < 16; ++attempt) {
    Rng rng(core::derive_seed(seed, attempt));

    // Room layout grid, nearly square.
    int nx = 1, ny = 1;
    while (nx * ny < params.rooms) (nx <= ny ? nx : ny)++;

    std::vector<int> heights(nx), widths(ny);
    for (auto& h : heights) h = to_cells(rng.uniform(params.room_min_m, params.room_max_m), res);
    for (auto& w : widths) w = to_cells(rng.uniform(params.room_min_m, params.room_max_m), res);

    std::vector<int> row_off(nx), col_off(ny);
    int total_rows = wall, total_cols = wall;
    for (int i = 0; i < nx; ++i) {
      row_off[i] = total_rows;
      total_rows += heights[i] + wall;
    }
    for (int j = 0; j < ny; ++j) {
      col_off[j] = total_cols;
      total_cols += widths[j] + wall;
    }

    SceneSpec scene;
    scene.resolution = res;
    scene.ceiling_height = params.ceiling_height_m;
    scene.occupancy = core::Grid2D<uint8_t>(total_rows, total_cols, 1);

    std::vector<Room> rooms;
    for (int i = 0; i < nx; ++i) {
      for (int j = 0; j < ny; ++j) {
        Room room{row_off[i], row_off[i] + heights[i] - 1, col_off[j],
                  col_off[j] + widths[j] - 1, "", i, j};
        for (int r = room.r0; r <= room.r1; ++r)
          for (int c = room.c0; c <= room.c1; ++c) scene.occupancy.at(r, c) = 0;
        rooms.push_back(room);
      }
    }

    // Assign room types: cycle through a shuffled template order so that the
    // common room kinds all appear before any repeats.
    std::vector<int> order(templates.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    for (size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[rng.uniform_int(i)]);
    for (size_t i = 0; i < rooms.size(); ++i)
      rooms[i].type = templates[order[i % order.size()]].type;

    // Doors: random spanning tree over the room grid plus extras.
    const int door_w = to_cells(params.door_width_m, res);
    std::vector<GridIndex> door_cells;
    auto carve_door = [&](const Room& a, const Room& b) {
      if (a.grid_x == b.grid_x) {  // vertical shared wall (varies col)
        const int wall_c = std::min(a.c1, b.c1) + 1;
        const int lo = std::max(a.r0, b.r0), hi = std::min(a.r1, b.r1);
        if (hi - lo + 1 < door_w) return;
        const int start = lo + static_cast<int>(rng.uniform_int(hi - lo + 2 - door_w));
        for (int r = start; r < start + door_w; ++r)
          for (int c = wall_c; c < wall_c + wall; ++c) {
            scene.occupancy.at(r, c) = 0;
            door_cells.push_back({r, c});
          }
      } else {  // horizontal shared wall (varies row)
        const int wall_r = std::min(a.r1, b.r1) + 1;
        const int lo = std::max(a.c0, b.c0), hi = std::min(a.c1, b.c1);
        if (hi - lo + 1 < door_w) return;
        const int start = lo + static_cast<int>(rng.uniform_int(hi - lo + 2 - door_w));
        for (int c = start; c < start + door_w; ++c)
          for (int r = wall_r; r < wall_r + wall; ++r) {
            scene.occupancy.at(r, c) = 0;
            door_cells.push_back({r, c});
          }
      }
    };

    std::vector<std::pair<int, int>> edges;
    auto room_at = [&](int i, int j) { return i * ny + j; };
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) {
        if (i + 1 < nx) edges.emplace_back(room_at(i, j), room_at(i + 1, j));
        if (j + 1 < ny) edges.emplace_back(room_at(i, j), room_at(i, j + 1));
      }
    for (size_t i = edges.size(); i > 1; --i)
      std::swap(edges[i - 1], edges[rng.uniform_int(i)]);
    std::vector<int> comp(rooms.size());
    for (size_t i = 0; i < comp.size(); ++i) comp[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
      return comp[x] == x ? x : comp[x] = find(comp[x]);
    };
    for (const auto& [a, b] : edges) {
      const bool joins = find(a) != find(b);
      if (joins || rng.bernoulli(params.extra_door_prob)) {
        carve_door(rooms[a], rooms[b]);
        comp[find(a)] = find(b);
      }
    }

    // Furniture.
    core::Grid2D<uint8_t> taken = scene.occupancy;  // walls + placed objects
    const int keepout = to_cells(params.door_keepout_m, res);
    const int clearance = to_cells(params.front_clearance_m, res);
    auto near_door = [&](const std::vector<GridIndex>& cells) {
      for (const auto& cell : cells)
        for (const auto& d : door_cells)
          if (std::abs(cell.row - d.row) <= keepout &&
              std::abs(cell.col - d.col) <= keepout)
            return true;
      return false;
    };
    auto region_free = [&](const std::vector<GridIndex>& cells) {
      for (const auto& cell : cells)
        if (!taken.in_bounds(cell) || taken.at(cell) != 0) return false;
      return true;
    };
    auto grow = [&](const std::vector<GridIndex>& cells, int side, int by) {
      // Cells extended `by` further into the room plus side gaps.
      std::vector<GridIndex> out;
      for (const auto& cell : cells) {
        for (int k = 1; k <= by; ++k) {
          switch (side) {
            case 0: out.push_back({cell.row + k, cell.col}); break;
            case 1: out.push_back({cell.row - k, cell.col}); break;
            case 2: out.push_back({cell.row, cell.col + k}); break;
            case 3: out.push_back({cell.row, cell.col - k}); break;
          }
        }
      }
      return out;
    };

    std::vector<std::vector<Placed>> placed_by_room(rooms.size());

    auto try_place = [&](size_t room_idx, const std::string& name) -> bool {
      const Room& room = rooms[room_idx];
      const ObjectShape shape = object_shape(name);
      const AnchorRule* rule = nullptr;
      for (const auto& a : anchors)
        if (a.name == name) { rule = &a; break; }
      const Placed* anchor = nullptr;
      if (rule) {
        for (const auto& p : placed_by_room[room_idx])
          if (p.name == rule->anchor) { anchor = &p; break; }
      }

      for (int attempt_place = 0; attempt_place < 40; ++attempt_place) {
        int side;
        if (anchor)
          side = anchor->side;
        else
          side = static_cast<int>(rng.uniform_int(4));
        const bool along_cols = side == 0 || side == 1;
        const int wall_lo = along_cols ? room.c0 : room.r0;
        const int wall_hi = along_cols ? room.c1 : room.r1;
        const int w = to_cells(shape.width, res);
        const int d = to_cells(shape.depth, res);
        if (wall_hi - wall_lo + 1 < w) continue;
        int off;
        if (anchor) {
          const int spread = to_cells(rule->max_dist, res);
          const int lo = std::max(wall_lo, anchor->off - spread);
          const int hi = std::min(wall_hi - w + 1, anchor->off + anchor->width_cells + spread);
          if (hi < lo) continue;
          off = lo + static_cast<int>(rng.uniform_int(hi - lo + 1));
        } else {
          off = wall_lo + static_cast<int>(rng.uniform_int(wall_hi - wall_lo + 2 - w));
        }
        auto cells = footprint(room, side, off, w, d);
        if (!region_free(cells)) continue;
        if (near_door(cells)) continue;
        auto front = grow(cells, side, clearance);
        if (!region_free(front)) continue;
        // Side gap so neighbouring objects stay separate blobs.
        bool gap_ok = true;
        for (const auto& p : placed_by_room[room_idx]) {
          if (p.side != side) continue;
          if (off < p.off + p.width_cells + 2 && p.off < off + w + 2) gap_ok = false;
        }
        if (!gap_ok) continue;

        Placed p{name, side, off, w, cells};
        for (const auto& cell : cells) taken.at(cell) = 1;
        placed_by_room[room_idx].push_back(p);

        SceneObject obj;
        std::vector<std::string> attrs;
        static const std::set<std::string> kColorable = {"chair", "couch", "bed", "towel"};
        if (kColorable.count(name) && rng.bernoulli(params.attribute_prob) &&
            !params.colors.empty())
          attrs.push_back(params.colors[rng.uniform_int(params.colors.size())]);
        obj.label = core::ObjectLabel(name, attrs);
        obj.height = shape.height;
        obj.cells = cells;
        std::sort(obj.cells.begin(), obj.cells.end());
        scene.objects.push_back(std::move(obj));
        return true;
      }
      return false;
    };

    for (size_t ri = 0; ri < rooms.size(); ++ri) {
      const RoomTemplate* tmpl = nullptr;
      for (const auto& t : templates)
        if (t.type == rooms[ri].type) { tmpl = &t; break; }
      if (!tmpl) continue;
      for (const auto& item : tmpl->objects) {
        const bool wanted = rng.bernoulli(item.prob);
        if (wanted) try_place(ri, item.name);
      }
    }

    // Start pose: prefer social rooms, keep clear of walls and furniture.
    std::vector<size_t> start_rooms;
    for (size_t i = 0; i < rooms.size(); ++i)
      if (rooms[i].type == "living" || rooms[i].type == "hallway")
        start_rooms.push_back(i);
    if (start_rooms.empty())
      for (size_t i = 0; i < rooms.size(); ++i) start_rooms.push_back(i);

    bool start_ok = false;
    const double obj_clear = params.start_object_clearance_m;
    for (int attempt_start = 0; attempt_start < 200 && !start_ok; ++attempt_start) {
      const Room& room = rooms[start_rooms[rng.uniform_int(start_rooms.size())]];
      const double x = rng.uniform((room.r0 + 1) * res, room.r1 * res);
      const double y = rng.uniform((room.c0 + 1) * res, room.c1 * res);
      // Clearance from anything blocked.
      bool clear = true;
      const int margin = to_cells(0.35, res);
      const GridIndex cell = scene.world_to_cell(x, y);
      for (int dr = -margin; dr <= margin && clear; ++dr)
        for (int dc = -margin; dc <= margin && clear; ++dc) {
          const GridIndex q{cell.row + dr, cell.col + dc};
          if (!taken.in_bounds(q) || taken.at(q) != 0) clear = false;
        }
      if (!clear) continue;
      bool far_enough = true;
      for (const auto& obj : scene.objects) {
        for (const auto& ocell : obj.cells) {
          const auto [ox, oy] = scene.cell_center(ocell);
          if (std::hypot(ox - x, oy - y) < obj_clear) {
            far_enough = false;
            break;
          }
        }
        if (!far_enough) break;
      }
      if (!far_enough) continue;
      scene.start = Pose{x, y, 0.88, core::normalize_angle(rng.uniform(-core::kPi, core::kPi)), 0.0};
      start_ok = true;
    }
    if (!start_ok) continue;

    // Default goal: the first preferred category that was actually placed.
    std::set<std::string> present;
    for (const auto& obj : scene.objects) present.insert(obj.label.name);
    for (const auto& pref : params.goal_preference) {
      if (present.count(pref)) {
        scene.goal_labels.push_back(core::ObjectLabel(pref));
        break;
      }
    }
    if (scene.goal_labels.empty() && !scene.objects.empty())
      scene.goal_labels.push_back(core::ObjectLabel(scene.objects.front().label.name));

    try {
      validate_scene(scene);
    } catch (const SceneError&) {
      continue;
    }
    return scene;
  }
  throw SceneError("generate_scene: could not build a valid scene (params infeasible?)");
}

}  // namespace semnav::sim
