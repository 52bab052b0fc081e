#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace semnav::reasoning {

/// Symmetric object co-occurrence prior used by the mock frontier scorer.
/// Shipped as a versioned data asset (data/cooccurrence.json); the built-in
/// table is identical so the library also works without the file.
class CooccurrenceTable {
 public:
  static CooccurrenceTable builtin();
  static CooccurrenceTable load(const std::filesystem::path& path);

  /// Score for finding `goal` near `context`; falls back to the self score
  /// when the names match and to the default for unknown pairs.
  double score(const std::string& goal, const std::string& context) const;

  double default_score() const { return default_score_; }
  double nothing_score() const { return nothing_score_; }
  double self_score() const { return self_score_; }
  int version() const { return version_; }

  bool operator==(const CooccurrenceTable&) const = default;

 private:
  static CooccurrenceTable from_json_text(const std::string& text);

  int version_ = 0;
  double default_score_ = 0.1;
  double nothing_score_ = 0.05;
  double self_score_ = 0.95;
  std::map<std::pair<std::string, std::string>, double> pairs_;  // key sorted
};

}  // namespace semnav::reasoning
