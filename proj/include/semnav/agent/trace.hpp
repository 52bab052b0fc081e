#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semnav/core/types.hpp"

namespace semnav::agent {

using core::Action;
using core::GridIndex;
using core::Pose;
using ordered_json = nlohmann::ordered_json;

/// One provider interaction recorded for the step it happened on.
struct ProviderCall {
  std::string provider;  // "propose" | "discover" | "detect" | "reason"
  ordered_json payload;
};

enum class GoalKind { none, frontier, exploit };
const char* goal_kind_name(GoalKind kind);

struct TraceStep {
  int t = 0;
  Action action = Action::stop;
  Pose pose;  // pose after the action
  bool collided = false;
  GoalKind goal_kind = GoalKind::none;
  std::optional<GridIndex> goal_cell;
  std::vector<ProviderCall> calls;
};

enum class FailureClass { collision, exploration, detection };
const char* failure_class_name(FailureClass failure);

struct EpisodeResult {
  bool success = false;
  int steps = 0;
  double path_length = 0.0;
  double optimal_length = 0.0;
  double spl = 0.0;
  std::optional<FailureClass> failure;
  bool provider_failure = false;
  std::string provider_error;
  std::string instruction;
  std::vector<ObjectLabel> proposed;
  std::string thought;
  std::vector<TraceStep> trace;

  bool valid() const { return !provider_failure && optimal_length > 0.0; }
};
using core::ObjectLabel;

/// Line-delimited replayable trace: one header record, one record per step,
/// one result record.
std::string trace_to_jsonl(const EpisodeResult& result);
EpisodeResult trace_from_jsonl(const std::string& text);

ordered_json result_summary_json(const EpisodeResult& result);

}  // namespace semnav::agent
