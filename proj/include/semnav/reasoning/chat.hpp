#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace semnav::reasoning {

struct ChatMessage {
  std::string role;  // "system" | "user" | "assistant"
  std::string text;
  std::optional<std::string> image_base64;  // attached to user messages
};

struct ChatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ChatConfig {
  std::string endpoint;  // http://host:port/path
  std::string model;
  std::string api_key;   // sent as a bearer header; redacted in logs
  double temperature = 0.0;
  double timeout_s = 60.0;
};

/// Minimal chat-completion client. POSTs
///   {"model": .., "messages": [{"role", "content"}...], "temperature": ..}
/// (image parts become {"type":"image","image_base64":..} content arrays)
/// and expects {"content": "<reply>"}. Throws ChatError on transport or
/// protocol failures.
class ChatClient {
 public:
  explicit ChatClient(ChatConfig config);

  std::string complete(const std::vector<ChatMessage>& messages);

  /// Called with (request json, response text) after every round trip, the
  /// api key already redacted. Used for episode trace logging.
  using TranscriptSink = std::function<void(const std::string&, const std::string&)>;
  void set_transcript_sink(TranscriptSink sink) { sink_ = std::move(sink); }

  const ChatConfig& config() const { return config_; }

 private:
  ChatConfig config_;
  std::string host_, path_;
  int port_ = 80;
  TranscriptSink sink_;
};

/// Contents of the last ``` fenced block in a reply (language tags are
/// ignored), or nothing when no complete block exists.
std::optional<std::string> last_fenced_block(const std::string& text);

}  // namespace semnav::reasoning
