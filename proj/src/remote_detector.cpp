#include "semnav/perception/remote.hpp"

#include <algorithm>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "semnav/perception/rle.hpp"

namespace semnav::perception {

using nlohmann::json;

std::string base64_encode(const std::vector<uint8_t>& bytes) {
  static const char* alphabet =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  for (size_t i = 0; i < bytes.size(); i += 3) {
    uint32_t chunk = bytes[i] << 16;
    if (i + 1 < bytes.size()) chunk |= bytes[i + 1] << 8;
    if (i + 2 < bytes.size()) chunk |= bytes[i + 2];
    out.push_back(alphabet[(chunk >> 18) & 63]);
    out.push_back(alphabet[(chunk >> 12) & 63]);
    out.push_back(i + 1 < bytes.size() ? alphabet[(chunk >> 6) & 63] : '=');
    out.push_back(i + 2 < bytes.size() ? alphabet[chunk & 63] : '=');
  }
  return out;
}

bool split_url(const std::string& url, std::string* host, int* port,
               std::string* path) {
  const std::string prefix = "http://";
  if (url.rfind(prefix, 0) != 0) return false;
  std::string rest = url.substr(prefix.size());
  const size_t slash = rest.find('/');
  *path = slash == std::string::npos ? "/" : rest.substr(slash);
  std::string hostport = rest.substr(0, slash);
  const size_t colon = hostport.find(':');
  *port = 80;
  if (colon != std::string::npos) {
    try {
      *port = std::stoi(hostport.substr(colon + 1));
    } catch (...) {
      return false;
    }
    *host = hostport.substr(0, colon);
  } else {
    *host = hostport;
  }
  return !host->empty();
}

RemoteDetector::RemoteDetector(RemoteDetectorConfig config)
    : config_(std::move(config)) {
  if (!split_url(config_.endpoint, &host_, &port_, &path_))
    throw std::invalid_argument("RemoteDetector: bad endpoint url: " +
                                config_.endpoint);
}

std::vector<Detection> validate_remote_detections(
    const std::vector<Detection>& raw, const ObjectPrompt& prompt) {
  std::vector<Detection> out;
  for (const auto& d : raw) {
    if (d.mask.empty()) continue;
    if (prompt.find(d.label.phrase()) < 0) continue;  // never invent labels
    Detection v = d;
    v.confidence = std::clamp(v.confidence, 0.0f, 1.0f);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Detection> RemoteDetector::detect(const Observation& obs,
                                              const ObjectPrompt& prompt) {
  last_error_.clear();
  if (prompt.empty()) return {};

  json req;
  req["image"] = base64_encode(obs.rgb_handle);
  req["prompt"] = prompt.rendered;
  req["box_threshold"] = config_.box_threshold;

  httplib::Client client(host_, port_);
  client.set_connection_timeout(static_cast<time_t>(config_.timeout_s), 0);
  client.set_read_timeout(static_cast<time_t>(config_.timeout_s), 0);

  auto res = client.Post(path_, req.dump(), "application/json");
  if (!res) {
    last_error_ = "transport error: " + httplib::to_string(res.error());
    return {};
  }
  if (res->status != 200) {
    last_error_ = "http status " + std::to_string(res->status);
    return {};
  }

  std::vector<Detection> raw;
  try {
    const json body = json::parse(res->body);
    const int h = obs.depth.rows(), w = obs.depth.cols();
    for (const auto& d : body.at("detections")) {
      Detection det;
      std::string label = d.at("label").get<std::string>();
      std::transform(label.begin(), label.end(), label.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      const int idx = prompt.find(label);
      if (idx < 0) continue;  // unknown label, drop the entry
      det.label = prompt.labels[idx];
      det.confidence = d.at("confidence").get<float>();
      const auto& rle = d.at("rle_mask");
      const int rh = rle.at("size")[0].get<int>();
      const int rw = rle.at("size")[1].get<int>();
      if (rh != h || rw != w) throw std::invalid_argument("mask size mismatch");
      det.mask = rle_decode(rle.at("counts").get<std::vector<int64_t>>(), h, w);
      raw.push_back(std::move(det));
    }
  } catch (const std::exception& e) {
    last_error_ = std::string("malformed response: ") + e.what();
    return {};
  }
  return validate_remote_detections(raw, prompt);
}

}  // namespace semnav::perception
