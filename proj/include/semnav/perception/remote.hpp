#pragma once

#include <string>

#include "semnav/perception/detection.hpp"

namespace semnav::perception {

struct RemoteDetectorConfig {
  std::string endpoint;        // e.g. http://host:port/detect
  double timeout_s = 60.0;
  double box_threshold = 0.55;
};

/// HTTP detection backend. POSTs
///   {"image": <base64 rgb payload>, "prompt": "<dot-separated>",
///    "box_threshold": <number>}
/// and expects
///   {"detections": [{"label": str, "confidence": num,
///                    "rle_mask": {"size": [h, w], "counts": [..]}}, ...]}.
/// Transport errors and malformed responses yield zero detections for the
/// step (the loop continues); the reason is kept in last_error().
class RemoteDetector : public Detector {
 public:
  explicit RemoteDetector(RemoteDetectorConfig config);

  std::vector<Detection> detect(const Observation& obs,
                                const ObjectPrompt& prompt) override;

  const std::string& last_error() const { return last_error_; }

 private:
  RemoteDetectorConfig config_;
  std::string host_;
  std::string path_;
  int port_ = 80;
  std::string last_error_;
};

/// Validates raw remote entries into Detection values: drops labels missing
/// from the prompt and empty masks, clamps confidences into [0, 1].
std::vector<Detection> validate_remote_detections(
    const std::vector<Detection>& raw, const ObjectPrompt& prompt);

std::string base64_encode(const std::vector<uint8_t>& bytes);

/// Splits "http://host:port/path"; returns false on anything unparsable.
bool split_url(const std::string& url, std::string* host, int* port,
               std::string* path);

}  // namespace semnav::perception
