#pragma once

#include <string>

#include "fourcolor/planar_map.hpp"
#include "json.hpp"

namespace fourcolor {

// Map files:      {"faces": {"<faceId>": ["v1", "v2", ...]}, "holes": {"<faceId>": [[...], ...]}}
// Coloring files: {"colors": {"<faceId>": 0..3}}
// "holes" is optional and only present for maps with islands.

PlanarMap map_from_json(const nlohmann::json& j);
nlohmann::json map_to_json(const PlanarMap& map);

Coloring coloring_from_json(const nlohmann::json& j);
nlohmann::json coloring_to_json(const Coloring& coloring);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

PlanarMap read_map_file(const std::string& path);
Coloring read_coloring_file(const std::string& path);

}  // namespace fourcolor
