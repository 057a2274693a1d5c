#pragma once

#include <string>

#include "fourcolor/map_io.hpp"
#include "fourcolor/planar_map.hpp"

namespace fixtures {

inline fourcolor::PlanarMap load(const std::string& name) {
  return fourcolor::read_map_file(std::string(FOURCOLOR_DATA_DIR) + "/" + name + ".json");
}

inline fourcolor::PlanarMap octahedron() {
  return fourcolor::PlanarMap({{"n1", {"n", "e1", "e2"}},
                               {"n2", {"n", "e2", "e3"}},
                               {"n3", {"n", "e3", "e4"}},
                               {"n4", {"n", "e4", "e1"}},
                               {"s1", {"s", "e2", "e1"}},
                               {"s2", {"s", "e3", "e2"}},
                               {"s3", {"s", "e4", "e3"}},
                               {"s4", {"s", "e1", "e4"}}});
}

// Square seed S whose exterior face X touches intervals 0 and 2; the faces
// Y1, Y2, Y3 sit in the pocket between those touches and W closes the far side.
inline fourcolor::PlanarMap pocket_map() {
  return fourcolor::PlanarMap({{"S", {"s0", "s1", "s2", "s3"}},
                               {"X", {"s0", "s1", "t1", "t2", "t3", "s2", "s3", "u", "v"}},
                               {"Y1", {"s1", "s2", "t3", "c", "t1"}},
                               {"Y2", {"t1", "c", "t2"}},
                               {"Y3", {"t2", "c", "t3"}},
                               {"W", {"s3", "s0", "v", "u"}}});
}

}  // namespace fixtures
