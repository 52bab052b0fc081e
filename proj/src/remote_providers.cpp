#include "semnav/reasoning/remote.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "semnav/perception/remote.hpp"  // base64_encode

namespace semnav::reasoning {

using nlohmann::json;

namespace {

std::vector<ObjectLabel> parse_labels(const json& arr) {
  std::vector<ObjectLabel> out;
  for (const auto& o : arr) {
    std::vector<std::string> attrs;
    if (o.contains("attributes"))
      attrs = o.at("attributes").get<std::vector<std::string>>();
    out.push_back(ObjectLabel(o.at("name").get<std::string>(), attrs));
  }
  return out;
}

json parse_block(const std::string& reply) {
  const auto block = last_fenced_block(reply);
  if (!block) throw std::runtime_error("no fenced block in reply");
  return json::parse(*block);
}

constexpr const char* kObjectShape =
    "a fenced json block of the shape\n"
    "```json\n"
    "{\"thought\": \"...\", \"objects\": [{\"name\": \"bed\", "
    "\"attributes\": [\"blue\"]}]}\n"
    "```";

}  // namespace

Proposal parse_proposal_reply(const std::string& reply) {
  const json j = parse_block(reply);
  Proposal p;
  p.thought = j.value("thought", "");
  p.objects = parse_labels(j.at("objects"));
  return p;
}

DiscoveryResult parse_discovery_reply(const std::string& reply) {
  const json j = parse_block(reply);
  DiscoveryResult r;
  r.discovered = parse_labels(j.at("discovered"));
  if (j.contains("promoted")) r.promoted = parse_labels(j.at("promoted"));
  return r;
}

std::vector<double> parse_scores_reply(const std::string& reply, size_t expected) {
  const json j = parse_block(reply);
  auto scores = j.at("scores").get<std::vector<double>>();
  if (scores.size() != expected)
    throw std::runtime_error("score count mismatch: got " +
                             std::to_string(scores.size()) + ", want " +
                             std::to_string(expected));
  for (auto& s : scores) s = std::clamp(s, 0.0, 1.0);
  return scores;
}

Proposal RemoteProposer::propose(const Instruction& instruction) {
  std::vector<ChatMessage> messages;
  std::string system =
      "You help a robot find objects in a home. Given an instruction, list "
      "every object that could satisfy it, each with any attributes "
      "(color, qualifiers, location phrases) the instruction implies.";
  if (policy_.chain_of_thought)
    system += " Think step by step about what the user needs before answering.";
  system += " End your reply with " + std::string(kObjectShape);
  messages.push_back({"system", system, std::nullopt});
  messages.push_back({"user", "Instruction: " + instruction.text, std::nullopt});

  std::string error;
  for (int attempt = 0; attempt <= policy_.retries; ++attempt) {
    try {
      Proposal p = parse_proposal_reply(client_.complete(messages));
      if (p.objects.empty()) throw std::runtime_error("empty object list");
      if (!policy_.chain_of_thought) p.thought.clear();
      return p;
    } catch (const std::exception& e) {
      error = e.what();
    }
  }
  throw ProviderError("propose failed after retries: " + error);
}

DiscoveryResult RemoteDiscoverer::discover(const Observation& obs,
                                           const Instruction& instruction,
                                           const std::vector<ObjectLabel>& known) {
  std::string known_list;
  for (const auto& label : known) {
    if (!known_list.empty()) known_list += ", ";
    known_list += label.phrase();
  }
  std::vector<ChatMessage> messages;
  messages.push_back(
      {"system",
       "You scan a robot camera image for objects that are not yet on the "
       "robot's list. Report every new object you can see, and separately "
       "which of them could satisfy the user's instruction. End your reply "
       "with a fenced json block {\"discovered\": [{\"name\": ..., "
       "\"attributes\": []}], \"promoted\": [...]} (promoted must be a "
       "subset of discovered plus the known list).",
       std::nullopt});
  ChatMessage user;
  user.role = "user";
  user.text = "Instruction: " + instruction.text + "\nKnown objects: " + known_list;
  user.image_base64 = perception::base64_encode(obs.rgb_handle);
  messages.push_back(std::move(user));

  for (int attempt = 0; attempt <= policy_.retries; ++attempt) {
    try {
      return parse_discovery_reply(client_.complete(messages));
    } catch (const std::exception&) {
      // best effort; fall through to an empty result
    }
  }
  return {};
}

FrontierScores RemoteScorer::score(const ReasonRequest& request) {
  degraded_ = false;
  std::string goals;
  for (const auto& g : request.goals) {
    if (!goals.empty()) goals += ", ";
    goals += g.phrase();
  }
  std::string body;
  if (!request.thought.empty()) body += "Reasoning so far: " + request.thought + "\n";
  body += "Goal objects: " + goals + "\n";
  body += "Frontiers:\n";
  for (size_t i = 0; i < request.frontiers.size(); ++i)
    body += std::to_string(i + 1) + ". " + request.frontiers[i].summary + "\n";
  body += "Rate each frontier with the likelihood (0 to 1) of finding a goal "
          "object near it.";

  std::vector<ChatMessage> messages;
  messages.push_back(
      {"system",
       "You rate exploration frontiers for a robot by common sense about "
       "which objects appear together. Reply with your reasoning, then end "
       "with a fenced json block {\"scores\": [..]} giving one number in "
       "[0,1] per frontier, in order.",
       std::nullopt});
  messages.push_back({"user", body, std::nullopt});

  for (int attempt = 0; attempt <= policy_.retries; ++attempt) {
    try {
      return FrontierScores{
          parse_scores_reply(client_.complete(messages), request.frontiers.size())};
    } catch (const std::exception&) {
    }
  }
  degraded_ = true;  // exploration degrades gracefully
  return FrontierScores{std::vector<double>(request.frontiers.size(), 0.5)};
}

}  // namespace semnav::reasoning
