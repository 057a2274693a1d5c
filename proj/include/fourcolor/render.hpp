#pragma once

#include <map>
#include <string>
#include <utility>

#include "fourcolor/planar_map.hpp"

namespace fourcolor {

using Point = std::pair<double, double>;

/// Barycentric straight-line layout. In each vertex component the longest
/// face walk is pinned to a regular polygon; islands sit inside their sea.
std::map<VertexId, Point> tutte_layout(const PlanarMap& map, int iterations = 400);

/// SVG with one path per face filled by its color; uncolored faces are gray.
std::string render_svg(const PlanarMap& map, const Coloring& coloring, double size = 480.0);

}  // namespace fourcolor
