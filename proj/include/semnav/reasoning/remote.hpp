#pragma once

#include "semnav/reasoning/chat.hpp"
#include "semnav/reasoning/providers.hpp"

namespace semnav::reasoning {

struct RemotePolicy {
  int retries = 2;  // re-asks after a parse failure
  bool chain_of_thought = true;
};

/// Remote ProposeLLM. The reply must end with a fenced json block
///   {"thought": str, "objects": [{"name": str, "attributes": [str]}]}
/// Parse failures after the retry budget raise ProviderError.
class RemoteProposer : public Proposer {
 public:
  RemoteProposer(ChatClient& client, RemotePolicy policy = {})
      : client_(client), policy_(policy) {}

  Proposal propose(const Instruction& instruction) override;

 private:
  ChatClient& client_;
  RemotePolicy policy_;
};

/// Remote DiscoverVLM; the observation's rgb handle rides along as base64.
/// Expected block: {"discovered": [...], "promoted": [...]} with the same
/// object shape as the proposer. Failures yield an empty result.
class RemoteDiscoverer : public Discoverer {
 public:
  RemoteDiscoverer(ChatClient& client, RemotePolicy policy = {})
      : client_(client), policy_(policy) {}

  DiscoveryResult discover(const Observation& obs, const Instruction& instruction,
                           const std::vector<ObjectLabel>& known) override;

 private:
  ChatClient& client_;
  RemotePolicy policy_;
};

/// Remote ReasonLLM. Expected block: {"scores": [..]} of the same length as
/// the frontier list; values are clamped into [0,1]. Failures after retries
/// fall back to uniform scores (0.5) and set degraded().
class RemoteScorer : public FrontierScorer {
 public:
  RemoteScorer(ChatClient& client, RemotePolicy policy = {})
      : client_(client), policy_(policy) {}

  FrontierScores score(const ReasonRequest& request) override;

  bool degraded() const { return degraded_; }

 private:
  ChatClient& client_;
  RemotePolicy policy_;
  bool degraded_ = false;
};

// Parsers are exposed for tests.
Proposal parse_proposal_reply(const std::string& reply);
DiscoveryResult parse_discovery_reply(const std::string& reply);
std::vector<double> parse_scores_reply(const std::string& reply, size_t expected);

}  // namespace semnav::reasoning
