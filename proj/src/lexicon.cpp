#include "semnav/reasoning/lexicon.hpp"

#include <algorithm>
#include <sstream>

namespace semnav::reasoning {

std::vector<std::string> tokenize(const std::string& text) {
  std::string clean;
  for (const char ch : text) {
    const unsigned char c = static_cast<unsigned char>(ch);
    if (std::isalnum(c))
      clean.push_back(static_cast<char>(std::tolower(c)));
    else if (c == '\'')
      continue;  // "I'm" -> "im"
    else
      clean.push_back(' ');
  }
  std::istringstream ss(clean);
  std::vector<std::string> tokens;
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

namespace {

std::string joined(const std::vector<std::string>& tokens) {
  std::string s;
  for (const auto& t : tokens) {
    if (!s.empty()) s += ' ';
    s += t;
  }
  return s;
}

bool contains_phrase(const std::string& haystack, const std::string& phrase) {
  // Token-boundary containment on already-normalized strings.
  const std::string padded = " " + haystack + " ";
  return padded.find(" " + phrase + " ") != std::string::npos;
}

}  // namespace

const Lexicon& Lexicon::builtin() {
  static const Lexicon kLexicon = [] {
    Lexicon lx;
    lx.nouns_ = {"chair", "bed", "plant", "toilet", "tv", "couch", "desk",
                 "refrigerator", "sink", "bathtub", "shower", "towel",
                 "painting", "trashcan", "stairs", "tap", "soap", "faucet",
                 "statue", "window", "television", "sofa", "fridge"};
    lx.adjectives_ = {"red", "blue", "green", "black", "white", "brown",
                      "yellow", "gray", "grey", "purple", "orange", "wooden",
                      "small", "large", "leather", "marble", "comfortable"};
    lx.demands_ = {
        {"lie down", {"bed", "couch"}},
        {"rest", {"bed", "couch"}},
        {"sleep", {"bed"}},
        {"nap", {"bed", "couch"}},
        {"exhausted", {"bed", "couch"}},
        {"wash my hands", {"sink", "towel", "soap"}},
        {"wash hands", {"sink", "towel", "soap"}},
        {"wash up", {"sink", "towel", "soap"}},
        {"take a bath", {"bathtub", "towel"}},
        {"bathe", {"bathtub", "shower", "towel"}},
        {"use the toilet", {"toilet"}},
        {"pee", {"toilet"}},
        {"hungry", {"refrigerator"}},
        {"thirsty", {"refrigerator", "sink"}},
        {"something cold to drink", {"refrigerator"}},
        {"watch the news", {"tv", "couch"}},
        {"watch tv", {"tv", "couch"}},
        {"watch something", {"tv", "couch"}},
        {"sit down", {"couch", "chair"}},
        {"place to sit", {"couch", "chair"}},
        {"work on my laptop", {"desk", "chair"}},
        {"place to work", {"desk", "chair"}},
        {"throw away", {"trashcan"}},
        {"throw this away", {"trashcan"}},
        {"upstairs", {"stairs"}},
        {"second floor", {"stairs"}},
    };
    lx.satisfiers_ = {
        {"lie down", {"bed", "couch"}},
        {"rest", {"bed", "couch"}},
        {"sleep", {"bed"}},
        {"nap", {"bed", "couch"}},
        {"exhausted", {"bed", "couch"}},
        {"wash my hands", {"sink", "tap", "faucet"}},
        {"wash hands", {"sink", "tap", "faucet"}},
        {"wash up", {"sink", "tap", "faucet", "bathtub"}},
        {"take a bath", {"bathtub", "shower"}},
        {"bathe", {"bathtub", "shower"}},
        {"use the toilet", {"toilet"}},
        {"pee", {"toilet"}},
        {"hungry", {"refrigerator"}},
        {"thirsty", {"refrigerator", "sink", "tap"}},
        {"something cold to drink", {"refrigerator"}},
        {"watch the news", {"tv"}},
        {"watch tv", {"tv"}},
        {"watch something", {"tv"}},
        {"sit down", {"couch", "chair", "bed"}},
        {"place to sit", {"couch", "chair", "bed"}},
        {"work on my laptop", {"desk"}},
        {"place to work", {"desk"}},
        {"throw away", {"trashcan"}},
        {"throw this away", {"trashcan"}},
        {"upstairs", {"stairs"}},
        {"second floor", {"stairs"}},
    };
    return lx;
  }();
  return kLexicon;
}

std::vector<ObjectLabel> Lexicon::propose(const std::string& instruction) const {
  const auto tokens = tokenize(instruction);
  const std::string normalized = joined(tokens);

  std::vector<ObjectLabel> out;
  auto push_unique = [&](const ObjectLabel& label) {
    for (const auto& existing : out)
      if (existing.phrase() == label.phrase()) return;
    out.push_back(label);
  };

  // Canonicalize a few synonyms so downstream matching stays on one name.
  auto canon = [](const std::string& n) -> std::string {
    if (n == "television") return "tv";
    if (n == "sofa") return "couch";
    if (n == "fridge") return "refrigerator";
    return n;
  };

  for (size_t i = 0; i < tokens.size(); ++i) {
    if (!nouns_.count(tokens[i])) continue;
    const std::string name = canon(tokens[i]);
    if (name == "window") continue;  // scenery, not a navigation target
    std::vector<std::string> attrs;
    // Adjectives immediately before the noun.
    size_t j = i;
    std::vector<std::string> pre;
    while (j > 0 && adjectives_.count(tokens[j - 1])) {
      pre.insert(pre.begin(), tokens[j - 1]);
      --j;
    }
    if (!pre.empty()) attrs.push_back(joined(pre));
    // "<noun> with the <...>" up to the next stop word.
    if (i + 2 < tokens.size() && tokens[i + 1] == "with" &&
        (tokens[i + 2] == "the" || tokens[i + 2] == "a")) {
      std::vector<std::string> phrase;
      for (size_t k = i + 3; k < tokens.size(); ++k) {
        if (tokens[k] == "next" || tokens[k] == "and" || tokens[k] == "in" ||
            tokens[k] == "near")
          break;
        phrase.push_back(tokens[k]);
        if (phrase.size() >= 3) break;
      }
      if (!phrase.empty()) attrs.push_back(joined(phrase));
    }
    // "next to the <noun2>"
    for (size_t k = i + 1; k + 3 < tokens.size() + 1; ++k) {
      if (tokens[k] == "next" && k + 3 < tokens.size() &&
          tokens[k + 1] == "to" &&
          (tokens[k + 2] == "the" || tokens[k + 2] == "a")) {
        attrs.push_back("next to " + tokens[k + 3]);
        break;
      }
    }
    push_unique(ObjectLabel(name, attrs));
  }

  for (const auto& [phrase, objects] : demands_) {
    if (!contains_phrase(normalized, phrase)) continue;
    for (const auto& name : objects) push_unique(ObjectLabel(name));
  }
  return out;
}

bool Lexicon::satisfies(const std::string& instruction,
                        const std::string& name) const {
  const std::string normalized = joined(tokenize(instruction));
  if (contains_phrase(normalized, name)) return true;
  for (const auto& [phrase, names] : satisfiers_) {
    if (names.count(name) && contains_phrase(normalized, phrase)) return true;
  }
  return false;
}

}  // namespace semnav::reasoning
