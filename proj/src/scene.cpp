#include "semnav/sim/scene.hpp"

#include <deque>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

namespace semnav::sim {

using ordered_json = nlohmann::ordered_json;

core::Grid2D<uint8_t> SceneSpec::blocked_grid() const {
  core::Grid2D<uint8_t> blocked = occupancy;
  for (const auto& obj : objects)
    for (const auto& cell : obj.cells)
      if (blocked.in_bounds(cell)) blocked.at(cell) = 1;
  return blocked;
}

std::vector<const SceneObject*> SceneSpec::goal_instances() const {
  std::vector<const SceneObject*> out;
  for (const auto& obj : objects) {
    for (const auto& goal : goal_labels) {
      if (obj.label.name != goal.name) continue;
      bool attrs_ok = true;
      for (const auto& a : goal.attributes) {
        if (std::find(obj.label.attributes.begin(), obj.label.attributes.end(),
                      a) == obj.label.attributes.end()) {
          attrs_ok = false;
          break;
        }
      }
      if (attrs_ok) {
        out.push_back(&obj);
        break;
      }
    }
  }
  return out;
}

bool cells_connected(const core::Grid2D<uint8_t>& blocked, GridIndex from,
                     GridIndex goal) {
  if (!blocked.in_bounds(from) || !blocked.in_bounds(goal)) return false;
  if (blocked.at(from) != 0) return false;
  core::Grid2D<uint8_t> seen(blocked.rows(), blocked.cols(), 0);
  std::deque<GridIndex> queue{from};
  seen.at(from) = 1;
  constexpr int dr[] = {1, -1, 0, 0};
  constexpr int dc[] = {0, 0, 1, -1};
  while (!queue.empty()) {
    GridIndex cur = queue.front();
    queue.pop_front();
    if (cur == goal) return true;
    for (int k = 0; k < 4; ++k) {
      GridIndex next{cur.row + dr[k], cur.col + dc[k]};
      if (!blocked.in_bounds(next) || seen.at(next) || blocked.at(next) != 0)
        continue;
      seen.at(next) = 1;
      queue.push_back(next);
    }
  }
  return false;
}

namespace {

ordered_json label_to_json(const ObjectLabel& label) {
  ordered_json j;
  j["name"] = label.name;
  j["attributes"] = label.attributes;
  return j;
}

ObjectLabel label_from_json(const ordered_json& j) {
  std::vector<std::string> attrs;
  if (j.contains("attributes")) attrs = j.at("attributes").get<std::vector<std::string>>();
  return ObjectLabel(j.at("name").get<std::string>(), std::move(attrs));
}

}  // namespace

std::string scene_to_string(const SceneSpec& scene) {
  ordered_json j;
  j["format_version"] = 1;
  j["resolution"] = scene.resolution;
  j["ceiling_height"] = scene.ceiling_height;
  std::vector<std::string> rows;
  rows.reserve(scene.rows());
  for (int r = 0; r < scene.rows(); ++r) {
    std::string line(scene.cols(), '.');
    for (int c = 0; c < scene.cols(); ++c)
      if (scene.occupancy.at(r, c)) line[c] = '#';
    rows.push_back(std::move(line));
  }
  j["occupancy"] = rows;
  ordered_json objs = ordered_json::array();
  for (const auto& obj : scene.objects) {
    ordered_json o = label_to_json(obj.label);
    o["height"] = obj.height;
    ordered_json cells = ordered_json::array();
    for (const auto& cell : obj.cells) cells.push_back({cell.row, cell.col});
    o["cells"] = cells;
    objs.push_back(o);
  }
  j["objects"] = objs;
  j["start"] = {{"x", scene.start.x},
                {"y", scene.start.y},
                {"z", scene.start.z},
                {"yaw", scene.start.yaw},
                {"pitch", scene.start.pitch}};
  ordered_json goals = ordered_json::array();
  for (const auto& g : scene.goal_labels) goals.push_back(label_to_json(g));
  j["goal_labels"] = goals;
  return j.dump(2) + "\n";
}

SceneSpec scene_from_string(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw SceneError(std::string("scene parse error: ") + e.what());
  }
  try {
    if (j.at("format_version").get<int>() != 1)
      throw SceneError("scene: unsupported format_version");
    SceneSpec scene;
    scene.resolution = j.at("resolution").get<double>();
    scene.ceiling_height = j.at("ceiling_height").get<double>();
    if (scene.resolution <= 0.0) throw SceneError("scene: resolution must be > 0");
    const auto& rows = j.at("occupancy");
    int h = static_cast<int>(rows.size());
    if (h == 0) throw SceneError("scene: empty occupancy");
    int w = static_cast<int>(rows[0].get<std::string>().size());
    scene.occupancy = core::Grid2D<uint8_t>(h, w, 0);
    for (int r = 0; r < h; ++r) {
      std::string line = rows[r].get<std::string>();
      if (static_cast<int>(line.size()) != w)
        throw SceneError("scene: ragged occupancy rows");
      for (int c = 0; c < w; ++c) {
        if (line[c] == '#')
          scene.occupancy.at(r, c) = 1;
        else if (line[c] != '.')
          throw SceneError("scene: occupancy must be '.' or '#'");
      }
    }
    for (const auto& o : j.at("objects")) {
      SceneObject obj;
      obj.label = label_from_json(o);
      obj.height = o.at("height").get<double>();
      for (const auto& cell : o.at("cells"))
        obj.cells.push_back({cell[0].get<int>(), cell[1].get<int>()});
      std::sort(obj.cells.begin(), obj.cells.end());
      obj.cells.erase(std::unique(obj.cells.begin(), obj.cells.end()),
                      obj.cells.end());
      scene.objects.push_back(std::move(obj));
    }
    const auto& s = j.at("start");
    scene.start = Pose{s.at("x").get<double>(), s.at("y").get<double>(),
                       s.at("z").get<double>(), s.at("yaw").get<double>(),
                       s.at("pitch").get<double>()};
    for (const auto& g : j.at("goal_labels"))
      scene.goal_labels.push_back(label_from_json(g));
    return scene;
  } catch (const SceneError&) {
    throw;
  } catch (const std::exception& e) {
    throw SceneError(std::string("scene: malformed document: ") + e.what());
  }
}

void validate_scene(const SceneSpec& scene) {
  for (const auto& obj : scene.objects) {
    if (obj.cells.empty()) throw SceneError("scene: object with no cells: " + obj.label.name);
    for (const auto& cell : obj.cells)
      if (!scene.occupancy.in_bounds(cell))
        throw SceneError("scene: object cell out of bounds: " + obj.label.name);
    if (obj.height <= 0.0 || obj.height > scene.ceiling_height)
      throw SceneError("scene: object height out of range: " + obj.label.name);
  }
  auto blocked = scene.blocked_grid();
  GridIndex start_cell = scene.world_to_cell(scene.start.x, scene.start.y);
  if (!blocked.in_bounds(start_cell) || blocked.at(start_cell) != 0)
    throw SceneError("scene: start pose is inside a blocked cell");
  auto goals = scene.goal_instances();
  if (!scene.goal_labels.empty()) {
    if (goals.empty()) throw SceneError("scene: no instance matches any goal label");
    // The goal object itself is blocked; reachability means some free cell
    // adjacent to the instance footprint is connected to the start.
    bool reachable = false;
    constexpr int dr[] = {1, -1, 0, 0};
    constexpr int dc[] = {0, 0, 1, -1};
    for (const auto* inst : goals) {
      for (const auto& cell : inst->cells) {
        for (int k = 0; k < 4 && !reachable; ++k) {
          GridIndex adj{cell.row + dr[k], cell.col + dc[k]};
          if (blocked.in_bounds(adj) && blocked.at(adj) == 0 &&
              cells_connected(blocked, start_cell, adj))
            reachable = true;
        }
        if (reachable) break;
      }
      if (reachable) break;
    }
    if (!reachable) throw SceneError("scene: goal unreachable from start");
  }
}

SceneSpec load_scene(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SceneError("scene: cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  SceneSpec scene = scene_from_string(text);
  validate_scene(scene);
  return scene;
}

void save_scene(const SceneSpec& scene, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw SceneError("scene: cannot write " + path.string());
  out << scene_to_string(scene);
}

}  // namespace semnav::sim
