#include "semnav/reasoning/cooccurrence.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace semnav::reasoning {

namespace {

const char* kBuiltinJson = R"({
  "version": 1,
  "default": 0.1,
  "nothing": 0.05,
  "self": 0.95,
  "pairs": [
    ["toilet", "bathtub", 0.9],
    ["toilet", "shower", 0.85],
    ["toilet", "sink", 0.8],
    ["toilet", "towel", 0.75],
    ["toilet", "tap", 0.7],
    ["bathtub", "shower", 0.8],
    ["bathtub", "sink", 0.75],
    ["bathtub", "towel", 0.8],
    ["bathtub", "tap", 0.65],
    ["shower", "towel", 0.8],
    ["sink", "towel", 0.7],
    ["sink", "tap", 0.9],
    ["sink", "soap", 0.8],
    ["sink", "refrigerator", 0.45],
    ["tap", "towel", 0.6],
    ["soap", "bathtub", 0.7],
    ["soap", "towel", 0.7],
    ["bed", "tv", 0.4],
    ["bed", "painting", 0.5],
    ["bed", "trashcan", 0.35],
    ["bed", "chair", 0.3],
    ["couch", "tv", 0.85],
    ["couch", "plant", 0.6],
    ["couch", "painting", 0.55],
    ["couch", "chair", 0.5],
    ["tv", "plant", 0.5],
    ["tv", "painting", 0.5],
    ["chair", "plant", 0.45],
    ["chair", "desk", 0.8],
    ["chair", "refrigerator", 0.4],
    ["desk", "painting", 0.45],
    ["desk", "plant", 0.5],
    ["desk", "trashcan", 0.5],
    ["refrigerator", "trashcan", 0.7],
    ["stairs", "painting", 0.4],
    ["stairs", "plant", 0.4]
  ]
})";

}  // namespace

CooccurrenceTable CooccurrenceTable::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("CooccurrenceTable: parse error: ") + e.what());
  }
  CooccurrenceTable t;
  try {
    t.version_ = j.at("version").get<int>();
    t.default_score_ = j.at("default").get<double>();
    t.nothing_score_ = j.at("nothing").get<double>();
    t.self_score_ = j.at("self").get<double>();
    for (const auto& p : j.at("pairs")) {
      std::string a = p[0].get<std::string>();
      std::string b = p[1].get<std::string>();
      const double s = p[2].get<double>();
      if (b < a) std::swap(a, b);
      t.pairs_[{a, b}] = s;
    }
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("CooccurrenceTable: malformed table: ") + e.what());
  }
  return t;
}

CooccurrenceTable CooccurrenceTable::builtin() {
  return from_json_text(kBuiltinJson);
}

CooccurrenceTable CooccurrenceTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("CooccurrenceTable: cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return from_json_text(text);
}

double CooccurrenceTable::score(const std::string& goal,
                                const std::string& context) const {
  if (goal == context) return self_score_;
  auto key = goal < context ? std::make_pair(goal, context)
                            : std::make_pair(context, goal);
  auto it = pairs_.find(key);
  return it == pairs_.end() ? default_score_ : it->second;
}

}  // namespace semnav::reasoning
