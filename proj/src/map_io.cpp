#include "fourcolor/map_io.hpp"

#include <fstream>
#include <sstream>

#include "fourcolor/errors.hpp"

namespace fourcolor {

using nlohmann::json;

namespace {

Walk walk_from_json(const json& j, const std::string& face) {
  if (!j.is_array()) throw InputError("walk of face " + face + " is not an array");
  Walk w;
  for (const auto& v : j) {
    if (!v.is_string()) throw InputError("vertex id in face " + face + " is not a string");
    w.push_back(v.get<std::string>());
  }
  return w;
}

}  // namespace

PlanarMap map_from_json(const json& j) {
  if (!j.is_object() || !j.contains("faces") || !j["faces"].is_object())
    throw InputError("map JSON must be an object with a \"faces\" object");
  PlanarMap map;
  for (const auto& [id, walk] : j["faces"].items()) map.add_face(id, walk_from_json(walk, id));
  if (j.contains("holes")) {
    if (!j["holes"].is_object()) throw InputError("\"holes\" must be an object");
    for (const auto& [id, list] : j["holes"].items()) {
      if (!list.is_array()) throw InputError("holes of face " + id + " must be an array of walks");
      for (const auto& walk : list) map.add_hole(id, walk_from_json(walk, id));
    }
  }
  return map;
}

json map_to_json(const PlanarMap& map) {
  json faces = json::object();
  json holes = json::object();
  for (const auto& [id, ws] : map.faces()) {
    faces[id] = ws.front();
    for (std::size_t h = 1; h < ws.size(); ++h) holes[id].push_back(ws[h]);
  }
  json out = {{"faces", faces}};
  if (!holes.empty()) out["holes"] = holes;
  return out;
}

Coloring coloring_from_json(const json& j) {
  if (!j.is_object() || !j.contains("colors") || !j["colors"].is_object())
    throw InputError("coloring JSON must be an object with a \"colors\" object");
  Coloring c;
  for (const auto& [id, col] : j["colors"].items()) {
    if (!col.is_number_integer()) throw InputError("color of face " + id + " is not an integer");
    const int v = col.get<int>();
    if (v < 0 || v >= kNumColors) throw InputError("color of face " + id + " out of range 0..3");
    c[id] = static_cast<Color>(v);
  }
  return c;
}

json coloring_to_json(const Coloring& coloring) {
  json colors = json::object();
  for (const auto& [id, c] : coloring) colors[id] = static_cast<int>(c);
  return {{"colors", colors}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

PlanarMap read_map_file(const std::string& path) { return map_from_json(read_json_file(path)); }

Coloring read_coloring_file(const std::string& path) { return coloring_from_json(read_json_file(path)); }

}  // namespace fourcolor
