#pragma once

#include <string>
#include <vector>

#include "semnav/sim/scene.hpp"

namespace semnav::sim {

/// One entry of a room furnishing template.
struct TemplateObject {
  std::string name;
  double prob = 1.0;  // placement probability
};

struct RoomTemplate {
  std::string type;
  std::vector<TemplateObject> objects;
};

/// "Place `name` on the same wall as `anchor`, within max_dist meters."
/// Encodes co-occurrence structure (toilet/bathtub, sink/tap, ...).
struct AnchorRule {
  std::string name;
  std::string anchor;
  double max_dist = 2.0;
};

struct ObjectShape {
  double width = 0.5;   // along-wall extent, meters
  double depth = 0.5;   // into-room extent, meters
  double height = 0.8;  // column height, meters
};

struct GeneratorParams {
  int rooms = 5;  // lower bound; the layout grid may round up
  double resolution = 0.05;
  double room_min_m = 3.0;
  double room_max_m = 4.4;
  double door_width_m = 1.1;
  double ceiling_height_m = 2.5;
  double extra_door_prob = 0.25;
  double door_keepout_m = 0.6;       // no furniture this close to a door
  double front_clearance_m = 0.7;    // free aisle in front of furniture
  double start_object_clearance_m = 1.2;
  double attribute_prob = 0.3;       // chance of a color attribute
  std::vector<std::string> colors = {"red", "blue", "green", "brown", "white"};
  std::vector<RoomTemplate> templates;  // empty = built-in defaults
  std::vector<AnchorRule> anchors;      // empty = built-in defaults
  std::vector<std::string> goal_preference = {
      "bed", "couch", "toilet", "tv", "refrigerator", "bathtub", "desk", "chair"};
};

const std::vector<RoomTemplate>& default_room_templates();
const std::vector<AnchorRule>& default_anchor_rules();
ObjectShape object_shape(const std::string& name);

/// Deterministically generates a connected multi-room scene with furniture
/// placed against walls following the anchor rules. Throws SceneError when
/// the parameters are infeasible (rooms < 1, no templates).
SceneSpec generate_scene(uint64_t seed, const GeneratorParams& params = {});

}  // namespace semnav::sim
