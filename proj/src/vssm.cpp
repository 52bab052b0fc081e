#include "semnav/mapping/vssm.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <stdexcept>

#include "semnav/sim/render.hpp"

namespace semnav::mapping {

namespace {

/// Per-pixel unit ray directions in the camera frame, cached per intrinsics.
struct PixelRays {
  int width = 0, height = 0;
  double fx = 0, fy = 0, cx = 0, cy = 0;
  std::vector<std::array<double, 3>> dirs;  // (right, down, forward) coefficients

  bool matches(const CameraIntrinsics& k) const {
    return width == k.width && height == k.height && fx == k.fx && fy == k.fy &&
           cx == k.cx && cy == k.cy;
  }
  void build(const CameraIntrinsics& k) {
    width = k.width; height = k.height;
    fx = k.fx; fy = k.fy; cx = k.cx; cy = k.cy;
    dirs.resize(static_cast<size_t>(k.width) * k.height);
    for (int v = 0; v < k.height; ++v)
      for (int u = 0; u < k.width; ++u) {
        const double a = (u - k.cx) / k.fx;
        const double b = (v - k.cy) / k.fy;
        const double n = std::sqrt(a * a + b * b + 1.0);
        dirs[static_cast<size_t>(v) * k.width + u] = {a / n, b / n, 1.0 / n};
      }
  }
};

PixelRays& pixel_ray_cache() {
  thread_local PixelRays cache;
  return cache;
}

struct FrameBasis {
  double right[3], down[3], fwd[3];
  explicit FrameBasis(const Pose& pose) {
    const double cy = std::cos(pose.yaw), sy = std::sin(pose.yaw);
    const double cp = std::cos(pose.pitch), sp = std::sin(pose.pitch);
    right[0] = sy; right[1] = -cy; right[2] = 0.0;
    down[0] = sp * cy; down[1] = sp * sy; down[2] = -cp;
    fwd[0] = cp * cy; fwd[1] = cp * sy; fwd[2] = sp;
  }
  std::array<double, 3> world_dir(const std::array<double, 3>& cam) const {
    return {cam[0] * right[0] + cam[1] * down[0] + cam[2] * fwd[0],
            cam[0] * right[1] + cam[1] * down[1] + cam[2] * fwd[1],
            cam[0] * right[2] + cam[1] * down[2] + cam[2] * fwd[2]};
  }
};

}  // namespace

VSSM::VSSM(const MapConfig& config, double center_x, double center_y)
    : config_(config) {
  const int cells = std::max(1, static_cast<int>(std::lround(config.size_m / config.resolution)));
  // Snap the origin to the global cell lattice so map cells coincide with
  // scene cells.
  origin_x_ = std::floor((center_x - cells * config.resolution / 2.0) / config.resolution) *
              config.resolution;
  origin_y_ = std::floor((center_y - cells * config.resolution / 2.0) / config.resolution) *
              config.resolution;
  occupied_ = core::Grid2D<float>(cells, cells, 0.0f);
  explored_ = core::Grid2D<float>(cells, cells, 0.0f);
}

std::optional<int> VSSM::find_channel(const std::string& phrase) const {
  auto it = channel_index_.find(phrase);
  if (it == channel_index_.end()) return std::nullopt;
  return it->second;
}

int VSSM::add_channel(const ObjectLabel& label) {
  const std::string key = label.phrase();
  if (channel_index_.count(key))
    throw std::invalid_argument("VSSM::add_channel: duplicate channel: " + key);
  const int index = static_cast<int>(channels_.size());
  channels_.push_back(label);
  channel_index_[key] = index;
  semantic_.emplace_back(rows(), cols(), 0.0f);
  return index;
}

void VSSM::fuse(core::Grid2D<float>& grid, GridIndex cell, float score) {
  float& v = grid.at(cell);
  if (config_.fusion == Fusion::max_score) {
    v = std::max(v, score);
  } else {
    const float a = static_cast<float>(config_.decay_alpha);
    v = std::clamp(a * v + (1.0f - a) * score, 0.0f, 1.0f);
  }
}

void VSSM::mark_occupied(GridIndex i, float score) {
  if (in_bounds(i)) occupied_.at(i) = std::max(occupied_.at(i), score);
}

std::vector<GridIndex> project_mask(const core::Grid2D<float>& depth,
                                    const std::vector<int>& mask,
                                    const Pose& pose,
                                    const CameraIntrinsics& camera,
                                    const VSSM& map) {
  auto& rays = pixel_ray_cache();
  if (!rays.matches(camera)) rays.build(camera);
  const FrameBasis basis(pose);
  const double bias = map.resolution() * 0.25;

  std::vector<GridIndex> cells;
  for (const int pix : mask) {
    if (pix < 0 || pix >= static_cast<int>(rays.dirs.size())) continue;
    const float d = depth[static_cast<size_t>(pix)];
    if (!std::isfinite(d) || d > map.config().max_range) continue;
    const auto dir = basis.world_dir(rays.dirs[pix]);
    const double t = d + bias;
    const double x = pose.x + dir[0] * t;
    const double y = pose.y + dir[1] * t;
    const GridIndex cell = map.world_to_cell(x, y);
    if (map.in_bounds(cell)) cells.push_back(cell);
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

void VSSM::update(const std::vector<Detection>& detections,
                  const Observation& obs, const CameraIntrinsics& camera) {
  // (a) semantic channels from detection masks
  for (const auto& det : detections) {
    int channel;
    if (auto existing = find_channel(det.label.phrase()))
      channel = *existing;
    else
      channel = add_channel(det.label);
    for (const auto& cell : project_mask(obs.depth, det.mask, obs.pose, camera, *this))
      fuse(semantic_[channel], cell, det.confidence);
  }

  // (b) occupancy from every finite-depth pixel in the obstacle height band,
  // (c) explored along every ray (DDA up to the hit or the range limit).
  auto& rays = pixel_ray_cache();
  if (!rays.matches(camera)) rays.build(camera);
  const FrameBasis basis(obs.pose);
  const double res = config_.resolution;
  const double bias = res * 0.25;

  const GridIndex start = world_to_cell(obs.pose.x, obs.pose.y);
  if (in_bounds(start)) explored_.at(start) = 1.0f;

  const size_t n = obs.depth.size();
  for (size_t pix = 0; pix < n; ++pix) {
    const float d = obs.depth[pix];
    const bool hit = std::isfinite(d) && d <= config_.max_range;
    const auto dir = basis.world_dir(rays.dirs[pix]);

    if (hit) {
      const double t = d + bias;
      const double hx = obs.pose.x + dir[0] * t;
      const double hy = obs.pose.y + dir[1] * t;
      const double hz = obs.pose.z + dir[2] * t;
      if (hz >= config_.obstacle_min_height && hz <= config_.obstacle_max_height) {
        const GridIndex cell = world_to_cell(hx, hy);
        if (in_bounds(cell)) fuse(occupied_, cell, 1.0f);
      }
    }

    // Explored: walk the ray's floor-plane projection cell by cell.
    const double horiz = std::hypot(dir[0], dir[1]);
    if (horiz < 1e-12) continue;
    const double t_end = hit ? static_cast<double>(d) : config_.max_range;
    const double ex = obs.pose.x + dir[0] * t_end;
    const double ey = obs.pose.y + dir[1] * t_end;
    const GridIndex last = world_to_cell(ex, ey);

    int r = start.row, c = start.col;
    const int step_r = dir[0] > 0.0 ? 1 : -1;
    const int step_c = dir[1] > 0.0 ? 1 : -1;
    const double t_delta_r = dir[0] != 0.0 ? res / std::abs(dir[0]) : INFINITY;
    const double t_delta_c = dir[1] != 0.0 ? res / std::abs(dir[1]) : INFINITY;
    const double ox = obs.pose.x - origin_x_, oy = obs.pose.y - origin_y_;
    double t_max_r = INFINITY, t_max_c = INFINITY;
    if (dir[0] != 0.0)
      t_max_r = ((dir[0] > 0.0 ? (r + 1) * res : r * res) - ox) / dir[0];
    if (dir[1] != 0.0)
      t_max_c = ((dir[1] > 0.0 ? (c + 1) * res : c * res) - oy) / dir[1];

    while (!(r == last.row && c == last.col)) {
      if (std::min(t_max_r, t_max_c) > t_end) break;
      if (t_max_r <= t_max_c) {
        r += step_r;
        t_max_r += t_delta_r;
      } else {
        c += step_c;
        t_max_c += t_delta_c;
      }
      if (!occupied_.in_bounds(r, c)) break;
      explored_.at(r, c) = 1.0f;
    }
  }
}

std::optional<GoalLocation> VSSM::locate_goal(
    const std::vector<ObjectLabel>& goals, double threshold) const {
  struct Candidate {
    float score;
    size_t blob_size;
    int channel;
    std::vector<GridIndex> blob;
  };
  std::optional<Candidate> best;

  for (const auto& goal : goals) {
    const auto channel = find_channel(goal.phrase());
    if (!channel) continue;
    const auto& grid = semantic_[*channel];

    float label_max = 0.0f;
    for (size_t i = 0; i < grid.size(); ++i) label_max = std::max(label_max, grid[i]);
    if (label_max < threshold) continue;

    // Largest 8-connected suprathreshold component of this label.
    core::Grid2D<uint8_t> seen(rows(), cols(), 0);
    std::vector<GridIndex> best_blob;
    for (int r = 0; r < rows(); ++r) {
      for (int c = 0; c < cols(); ++c) {
        if (seen.at(r, c) || grid.at(r, c) < threshold) continue;
        std::vector<GridIndex> blob;
        std::deque<GridIndex> queue{{r, c}};
        seen.at(r, c) = 1;
        while (!queue.empty()) {
          const GridIndex cur = queue.front();
          queue.pop_front();
          blob.push_back(cur);
          for (int dr = -1; dr <= 1; ++dr)
            for (int dc = -1; dc <= 1; ++dc) {
              const GridIndex next{cur.row + dr, cur.col + dc};
              if (!in_bounds(next) || seen.at(next) || grid.at(next) < threshold)
                continue;
              seen.at(next) = 1;
              queue.push_back(next);
            }
        }
        if (blob.size() > best_blob.size() ||
            (blob.size() == best_blob.size() && !best_blob.empty() &&
             blob.front() < best_blob.front()))
          best_blob = std::move(blob);
      }
    }

    const bool better =
        !best || label_max > best->score ||
        (label_max == best->score && best_blob.size() > best->blob_size);
    if (better)
      best = Candidate{label_max, best_blob.size(), *channel, std::move(best_blob)};
  }

  if (!best) return std::nullopt;

  // Centroid: the member cell nearest the component mean (ties to the
  // lexicographically smallest cell).
  double mr = 0.0, mc = 0.0;
  for (const auto& cell : best->blob) {
    mr += cell.row;
    mc += cell.col;
  }
  mr /= best->blob.size();
  mc /= best->blob.size();
  GridIndex centroid = best->blob.front();
  double best_d = INFINITY;
  std::vector<GridIndex> sorted_blob = best->blob;
  std::sort(sorted_blob.begin(), sorted_blob.end());
  for (const auto& cell : sorted_blob) {
    const double d = (cell.row - mr) * (cell.row - mr) + (cell.col - mc) * (cell.col - mc);
    if (d < best_d - 1e-12) {
      best_d = d;
      centroid = cell;
    }
  }
  return GoalLocation{centroid, std::move(sorted_blob), best->channel, best->score};
}

std::vector<std::pair<ObjectLabel, float>> VSSM::objects_near(
    GridIndex cell, double radius_m, double threshold) const {
  const int reach = static_cast<int>(std::ceil(radius_m / config_.resolution));
  std::vector<std::pair<ObjectLabel, float>> out;
  for (int ch = 0; ch < channel_count(); ++ch) {
    float best = 0.0f;
    for (int dr = -reach; dr <= reach; ++dr)
      for (int dc = -reach; dc <= reach; ++dc) {
        const GridIndex q{cell.row + dr, cell.col + dc};
        if (!in_bounds(q)) continue;
        if (std::hypot(dr * config_.resolution, dc * config_.resolution) >
            radius_m + 1e-12)
          continue;
        best = std::max(best, semantic_[ch].at(q));
      }
    if (best >= threshold) out.emplace_back(channels_[ch], best);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return out;
}

namespace {

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}
void put_f64(std::vector<uint8_t>& out, double v) {
  uint64_t bits;
  std::memcpy(&bits, &v, 8);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(bits >> (8 * i)));
}
void put_string(std::vector<uint8_t>& out, const std::string& s) {
  put_u32(out, static_cast<uint32_t>(s.size()));
  out.insert(out.end(), s.begin(), s.end());
}
void put_grid(std::vector<uint8_t>& out, const core::Grid2D<float>& g) {
  for (const float v : g.data()) {
    uint32_t bits;
    std::memcpy(&bits, &v, 4);
    put_u32(out, bits);
  }
}

struct Reader {
  const std::vector<uint8_t>& bytes;
  size_t pos = 0;
  void need(size_t n) const {
    if (pos + n > bytes.size())
      throw std::runtime_error("VSSM::deserialize: truncated data");
  }
  uint32_t u32() {
    need(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(bytes[pos++]) << (8 * i);
    return v;
  }
  double f64() {
    need(8);
    uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<uint64_t>(bytes[pos++]) << (8 * i);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
  }
  std::string str() {
    const uint32_t n = u32();
    need(n);
    std::string s(bytes.begin() + pos, bytes.begin() + pos + n);
    pos += n;
    return s;
  }
  void grid(core::Grid2D<float>& g) {
    for (auto& v : g.data()) {
      const uint32_t bits = u32();
      std::memcpy(&v, &bits, 4);
    }
  }
};

constexpr char kMagic[4] = {'V', 'S', 'S', 'M'};
constexpr uint32_t kVersion = 1;

}  // namespace

std::vector<uint8_t> VSSM::serialize() const {
  std::vector<uint8_t> out;
  out.insert(out.end(), kMagic, kMagic + 4);
  put_u32(out, kVersion);
  put_f64(out, config_.resolution);
  put_u32(out, static_cast<uint32_t>(rows()));
  put_u32(out, static_cast<uint32_t>(cols()));
  put_f64(out, origin_x_);
  put_f64(out, origin_y_);
  put_u32(out, static_cast<uint32_t>(channels_.size()));
  for (const auto& label : channels_) {
    put_string(out, label.name);
    put_u32(out, static_cast<uint32_t>(label.attributes.size()));
    for (const auto& a : label.attributes) put_string(out, a);
  }
  put_grid(out, occupied_);
  put_grid(out, explored_);
  for (const auto& g : semantic_) put_grid(out, g);
  return out;
}

VSSM VSSM::deserialize(const std::vector<uint8_t>& bytes, const MapConfig& config) {
  Reader in{bytes};
  in.need(4);
  if (std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw std::runtime_error("VSSM::deserialize: bad magic");
  in.pos = 4;
  if (in.u32() != kVersion)
    throw std::runtime_error("VSSM::deserialize: unsupported version");
  const double resolution = in.f64();
  const uint32_t rows = in.u32();
  const uint32_t cols = in.u32();
  if (rows == 0 || cols == 0 || rows > 100000 || cols > 100000 ||
      resolution <= 0.0)
    throw std::runtime_error("VSSM::deserialize: implausible geometry");
  const double ox = in.f64();
  const double oy = in.f64();
  const uint32_t n_channels = in.u32();
  if (n_channels > 100000)
    throw std::runtime_error("VSSM::deserialize: implausible channel count");

  MapConfig cfg = config;
  cfg.resolution = resolution;
  cfg.size_m = rows * resolution;
  VSSM map(cfg, 0.0, 0.0);
  map.origin_x_ = ox;
  map.origin_y_ = oy;
  map.occupied_ = core::Grid2D<float>(rows, cols, 0.0f);
  map.explored_ = core::Grid2D<float>(rows, cols, 0.0f);

  for (uint32_t i = 0; i < n_channels; ++i) {
    const std::string name = in.str();
    const uint32_t n_attrs = in.u32();
    std::vector<std::string> attrs;
    for (uint32_t k = 0; k < n_attrs; ++k) attrs.push_back(in.str());
    map.add_channel(ObjectLabel(name, attrs));
    map.semantic_.back() = core::Grid2D<float>(rows, cols, 0.0f);
  }
  in.grid(map.occupied_);
  in.grid(map.explored_);
  for (auto& g : map.semantic_) in.grid(g);
  if (in.pos != bytes.size())
    throw std::runtime_error("VSSM::deserialize: trailing bytes");
  return map;
}

bool VSSM::operator==(const VSSM& other) const {
  return origin_x_ == other.origin_x_ && origin_y_ == other.origin_y_ &&
         channels_.size() == other.channels_.size() &&
         [&] {
           for (size_t i = 0; i < channels_.size(); ++i)
             if (!(channels_[i] == other.channels_[i]) ||
                 !(semantic_[i] == other.semantic_[i]))
               return false;
           return true;
         }() &&
         occupied_ == other.occupied_ && explored_ == other.explored_;
}

}  // namespace semnav::mapping
