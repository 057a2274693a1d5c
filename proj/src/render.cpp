#include "fourcolor/render.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <set>
#include <sstream>

namespace fourcolor {

namespace {

constexpr const char* kPalette[kNumColors] = {"#e45756", "#4c78a8", "#f2cf5b", "#54a24b"};

void place_on_circle(const Walk& w, Point center, double radius, std::map<VertexId, Point>& pos) {
  const double n = static_cast<double>(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(j) / n + std::numbers::pi / 2.0;
    pos[w[j]] = {center.first + radius * std::cos(a), center.second + radius * std::sin(a)};
  }
}

Point centroid(const Walk& w, const std::map<VertexId, Point>& pos) {
  double x = 0, y = 0;
  for (const auto& v : w) {
    x += pos.at(v).first;
    y += pos.at(v).second;
  }
  return {x / static_cast<double>(w.size()), y / static_cast<double>(w.size())};
}

}  // namespace

std::map<VertexId, Point> tutte_layout(const PlanarMap& map, int iterations) {
  std::map<VertexId, std::set<VertexId>> nb;
  for (const auto& [f, walks] : map.faces()) {
    for (const auto& w : walks) {
      for (std::size_t j = 0; j < w.size(); ++j) {
        const auto& a = w[j];
        const auto& b = w[(j + 1) % w.size()];
        nb[a].insert(b);
        nb[b].insert(a);
      }
    }
  }
  const auto comps = map.components();
  auto component_of = [&](const VertexId& v) {
    for (std::size_t c = 0; c < comps.size(); ++c)
      if (std::binary_search(comps[c].begin(), comps[c].end(), v)) return c;
    return comps.size();
  };

  std::map<VertexId, Point> pos;
  std::set<VertexId> pinned;
  // Each component: its outer walk on a circle, the rest relaxed to barycenters.
  auto lay_out = [&](std::size_t c, const Walk& outer, Point center, double radius) {
    place_on_circle(outer, center, radius, pos);
    pinned.insert(outer.begin(), outer.end());
    for (const auto& v : comps[c])
      if (!pos.contains(v)) pos[v] = center;
    for (int it = 0; it < iterations; ++it) {
      for (const auto& v : comps[c]) {
        if (pinned.contains(v)) continue;
        double x = 0, y = 0;
        for (const auto& u : nb[v]) {
          x += pos[u].first;
          y += pos[u].second;
        }
        const double d = static_cast<double>(nb[v].size());
        pos[v] = {x / d, y / d};
      }
    }
  };

  // Mainland: component of the longest primary walk.
  FaceId outer_face;
  for (const auto& [f, walks] : map.faces())
    if (outer_face.empty() || walks.front().size() > map.walk(outer_face).size()) outer_face = f;
  std::set<std::size_t> done;
  std::deque<std::size_t> queue;
  const std::size_t mainland = component_of(map.walk(outer_face).front());
  lay_out(mainland, map.walk(outer_face), {0.0, 0.0}, 1.0);
  done.insert(mainland);
  queue.push_back(mainland);
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (const auto& [f, walks] : map.faces()) {
      if (walks.size() < 2) continue;
      // The walk of this face lying in component c bounds the sea region.
      const Walk* sea = nullptr;
      for (const auto& w : walks)
        if (component_of(w.front()) == c) sea = &w;
      if (!sea) continue;
      const Point center = centroid(*sea, pos);
      double reach = 1e9;
      for (const auto& v : *sea) reach = std::min(reach, std::hypot(pos[v].first - center.first, pos[v].second - center.second));
      std::vector<const Walk*> holes;
      for (const auto& w : walks) {
        const std::size_t hc = component_of(w.front());
        if (!done.contains(hc)) holes.push_back(&w);
      }
      for (std::size_t h = 0; h < holes.size(); ++h) {
        const std::size_t hc = component_of(holes[h]->front());
        const double r = 0.45 * reach / static_cast<double>(holes.size());
        const double off = holes.size() == 1 ? 0.0 : reach * 0.5;
        const double a = 2.0 * std::numbers::pi * static_cast<double>(h) / static_cast<double>(holes.size());
        lay_out(hc, *holes[h], {center.first + off * std::cos(a), center.second + off * std::sin(a)}, r);
        done.insert(hc);
        queue.push_back(hc);
      }
    }
  }
  return pos;
}

std::string render_svg(const PlanarMap& map, const Coloring& coloring, double size) {
  const auto pos = tutte_layout(map);
  const double half = size / 2.0;
  const double scale = half * 0.9;
  auto px = [&](const VertexId& v) {
    const auto& p = pos.at(v);
    return Point{half + scale * p.first, half - scale * p.second};
  };
  auto subpath = [&](const Walk& w) {
    std::ostringstream s;
    if (w.size() == 2) {
      // Two-vertex walk: draw as a lens of two arcs.
      const auto a = px(w[0]);
      const auto b = px(w[1]);
      const double r = std::hypot(a.first - b.first, a.second - b.second) * 0.75;
      s << "M" << a.first << "," << a.second << " A" << r << "," << r << " 0 0 1 " << b.first << "," << b.second
        << " A" << r << "," << r << " 0 0 1 " << a.first << "," << a.second << " Z ";
      return s.str();
    }
    for (std::size_t j = 0; j < w.size(); ++j) {
      const auto p = px(w[j]);
      s << (j == 0 ? "M" : "L") << p.first << "," << p.second << " ";
    }
    s << "Z ";
    return s.str();
  };

  FaceId outer_face;
  for (const auto& [f, walks] : map.faces())
    if (outer_face.empty() || walks.front().size() > map.walk(outer_face).size()) outer_face = f;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  std::vector<FaceId> order{outer_face};
  for (const auto& f : map.face_ids())
    if (f != outer_face) order.push_back(f);
  for (const auto& f : order) {
    const auto& walks = map.walks(f);
    auto it = coloring.find(f);
    const std::string fill = it == coloring.end() || it->second >= kNumColors ? "#cccccc" : kPalette[it->second];
    std::string d;
    // The outer face fills the canvas outside its walk.
    if (f == outer_face) d = "M0,0 L" + std::to_string(size) + ",0 L" + std::to_string(size) + "," +
                             std::to_string(size) + " L0," + std::to_string(size) + " Z ";
    for (const auto& w : walks) d += subpath(w);
    svg << "  <path data-face=\"" << f << "\" d=\"" << d << "\" fill=\"" << fill
        << "\" fill-rule=\"evenodd\" stroke=\"#222\" stroke-width=\"1.5\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace fourcolor
