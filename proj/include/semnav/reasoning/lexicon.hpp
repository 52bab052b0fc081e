#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "semnav/core/types.hpp"

namespace semnav::reasoning {

using core::ObjectLabel;

/// The deterministic keyword knowledge behind the mock language providers:
/// object nouns, attribute adjectives, and demand phrases mapped to the
/// objects that satisfy them.
class Lexicon {
 public:
  static const Lexicon& builtin();

  const std::set<std::string>& nouns() const { return nouns_; }

  /// Objects proposed for an instruction: direct noun mentions (with any
  /// preceding adjectives and "with the ..." / "next to the ..." phrases as
  /// attributes) plus demand-rule hits.
  std::vector<ObjectLabel> propose(const std::string& instruction) const;

  /// True iff `name` satisfies the instruction: mentioned directly or listed
  /// as a satisfier of a matched demand phrase.
  bool satisfies(const std::string& instruction, const std::string& name) const;

 private:
  std::set<std::string> nouns_;
  std::set<std::string> adjectives_;
  /// phrase -> objects an instruction containing the phrase asks for
  std::vector<std::pair<std::string, std::vector<std::string>>> demands_;
  /// phrase -> wider set of objects that would satisfy the demand
  std::vector<std::pair<std::string, std::set<std::string>>> satisfiers_;
};

/// Lowercases and strips punctuation into space-separated tokens.
std::vector<std::string> tokenize(const std::string& text);

}  // namespace semnav::reasoning
