#include "semnav/reasoning/chat.hpp"

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "semnav/perception/remote.hpp"  // split_url

namespace semnav::reasoning {

using nlohmann::json;

ChatClient::ChatClient(ChatConfig config) : config_(std::move(config)) {
  if (!perception::split_url(config_.endpoint, &host_, &port_, &path_))
    throw std::invalid_argument("ChatClient: bad endpoint url: " + config_.endpoint);
}

std::string ChatClient::complete(const std::vector<ChatMessage>& messages) {
  json req;
  req["model"] = config_.model;
  req["temperature"] = config_.temperature;
  req["messages"] = json::array();
  for (const auto& m : messages) {
    json msg;
    msg["role"] = m.role;
    if (m.image_base64) {
      msg["content"] = json::array(
          {{{"type", "text"}, {"text", m.text}},
           {{"type", "image"}, {"image_base64", *m.image_base64}}});
    } else {
      msg["content"] = m.text;
    }
    req["messages"].push_back(std::move(msg));
  }

  httplib::Client client(host_, port_);
  client.set_connection_timeout(static_cast<time_t>(config_.timeout_s), 0);
  client.set_read_timeout(static_cast<time_t>(config_.timeout_s), 0);
  httplib::Headers headers;
  if (!config_.api_key.empty())
    headers.emplace("Authorization", "Bearer " + config_.api_key);

  auto res = client.Post(path_, headers, req.dump(), "application/json");

  auto log = [&](const std::string& response) {
    if (!sink_) return;
    json redacted = req;
    // Image payloads are bulky and keys are secret; keep the trace lean.
    for (auto& m : redacted["messages"])
      if (m["content"].is_array())
        for (auto& part : m["content"])
          if (part.contains("image_base64"))
            part["image_base64"] = "<" + std::to_string(
                part["image_base64"].get<std::string>().size()) + " bytes>";
    sink_(redacted.dump(), response);
  };

  if (!res) {
    log("<transport error: " + httplib::to_string(res.error()) + ">");
    throw ChatError("chat transport error: " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    log("<http " + std::to_string(res->status) + ">");
    throw ChatError("chat http status " + std::to_string(res->status));
  }
  try {
    const json body = json::parse(res->body);
    const std::string content = body.at("content").get<std::string>();
    log(content);
    return content;
  } catch (const std::exception& e) {
    log("<malformed body>");
    throw ChatError(std::string("chat malformed response: ") + e.what());
  }
}

std::optional<std::string> last_fenced_block(const std::string& text) {
  // Scan fence pairs from the end; a fence line is ``` plus an optional tag.
  size_t close = text.rfind("```");
  while (close != std::string::npos) {
    if (close == 0) return std::nullopt;
    const size_t open = text.rfind("```", close - 1);
    if (open == std::string::npos) return std::nullopt;
    size_t body_start = text.find('\n', open);
    if (body_start != std::string::npos && body_start < close) {
      ++body_start;
      return text.substr(body_start, close - body_start);
    }
    close = open == 0 ? std::string::npos : text.rfind("```", open - 1);
  }
  return std::nullopt;
}

}  // namespace semnav::reasoning
