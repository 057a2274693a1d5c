#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "fourcolor/errors.hpp"
#include "fourcolor/map_io.hpp"
#include "fourcolor/oracle.hpp"
#include "fourcolor/planar_map.hpp"

using namespace fourcolor;

namespace {

bool mentions(const ValidationReport& r, const std::string& needle) {
  return std::any_of(r.problems.begin(), r.problems.end(),
                     [&](const std::string& p) { return p.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("fixture maps validate with the expected counts") {
  const auto tetra = fixtures::load("tetrahedron");
  CHECK(validate_map(tetra).ok());
  CHECK(tetra.num_vertices() == 4);
  CHECK(tetra.num_edges() == 6);
  CHECK(tetra.num_faces() == 4);

  const auto pyramid = fixtures::load("square_pyramid");
  CHECK(validate_map(pyramid).ok());
  CHECK(pyramid.num_vertices() == 5);
  CHECK(pyramid.num_edges() == 8);
  CHECK(pyramid.num_faces() == 5);

  for (const auto* name : {"digon", "cube", "island", "nested_island"}) {
    INFO(name);
    CHECK(validate_map(fixtures::load(name)).ok());
  }
  CHECK(validate_map(fixtures::octahedron()).ok());
  CHECK(validate_map(fixtures::pocket_map()).ok());
}

TEST_CASE("validation names each broken invariant") {
  SUBCASE("single-sided edges") {
    const PlanarMap m({{"A", {"a", "b", "c"}}, {"B", {"a", "b", "d"}}});
    CHECK(mentions(validate_map(m), "shared by 1 face"));
  }
  SUBCASE("one face") {
    const PlanarMap m({{"A", {"a", "b", "c"}}});
    CHECK(mentions(validate_map(m), "fewer than 2 faces"));
  }
  SUBCASE("repeated vertex") {
    const PlanarMap m({{"A", {"a", "b", "a", "c"}}, {"B", {"c", "a", "b", "a"}}});
    CHECK(mentions(validate_map(m), "repeats vertex"));
  }
  SUBCASE("disconnected") {
    const PlanarMap m({{"A", {"a", "b", "c"}}, {"B", {"c", "b", "a"}}, {"C", {"x", "y", "z"}}, {"D", {"z", "y", "x"}}});
    CHECK(mentions(validate_map(m), "disconnected"));
  }
  SUBCASE("Euler characteristic") {
    // Two triangles glued along all edges plus a third copy: every edge on 3 faces.
    const PlanarMap m({{"A", {"a", "b", "c"}}, {"B", {"c", "b", "a"}}, {"C", {"a", "b", "c"}}});
    CHECK_FALSE(validate_map(m).ok());
  }
}

TEST_CASE("dual adjacency") {
  const auto tetra = dual(fixtures::load("tetrahedron"));
  CHECK(tetra.nodes.size() == 4);
  CHECK(tetra.edges.size() == 6);

  const auto digon = dual(fixtures::load("digon"));
  CHECK(digon.edges.size() == 1);
  CHECK(digon.adjacent("A", "B"));

  const auto pyr = dual(fixtures::load("square_pyramid"));
  for (const auto* s : {"s1", "s2", "s3", "s4"}) CHECK(pyr.adjacent("base", s));
  CHECK(pyr.adjacent("s1", "s2"));
  CHECK(pyr.adjacent("s2", "s3"));
  CHECK(pyr.adjacent("s3", "s4"));
  CHECK(pyr.adjacent("s4", "s1"));
  CHECK_FALSE(pyr.adjacent("s1", "s3"));
  CHECK_FALSE(pyr.adjacent("s2", "s4"));

  // The sea is adjacent to its island's coastal faces.
  const auto island = dual(fixtures::load("island"));
  CHECK(island.adjacent("sea", "I1"));
  CHECK_FALSE(island.adjacent("F1", "I1"));
}

TEST_CASE("cubify") {
  SUBCASE("cubic map is unchanged") {
    const auto tetra = fixtures::load("tetrahedron");
    const auto [m, rec] = cubify(tetra);
    CHECK(m == tetra);
    CHECK(rec.empty());
  }
  SUBCASE("square pyramid: V+3, E+4, F+1") {
    const auto [m, rec] = cubify(fixtures::load("square_pyramid"));
    CHECK(m.num_vertices() == 8);
    CHECK(m.num_edges() == 12);
    CHECK(m.num_faces() == 6);
    CHECK(rec.added_faces.size() == 1);
    CHECK(m.walk(rec.added_faces.front()).size() == 4);
    CHECK(validate_map(m).ok());
    for (const auto& [v, d] : m.degrees()) CHECK(d == 3);
  }
  SUBCASE("octahedron: six 4-gons") {
    const auto [m, rec] = cubify(fixtures::octahedron());
    CHECK(rec.added_faces.size() == 6);
    for (const auto& f : rec.added_faces) CHECK(m.walk(f).size() == 4);
    for (const auto& [v, d] : m.degrees()) CHECK(d == 3);
    CHECK(validate_map(m).ok());
    // Independent recount: each degree-d vertex adds d-1 vertices and d edges.
    CHECK(m.num_vertices() == 6 + 6 * 3);
    CHECK(m.num_edges() == 12 + 6 * 4);
  }
  SUBCASE("degree-2 vertices are rejected") {
    CHECK_THROWS_AS(cubify(fixtures::load("digon")), InputError);
  }
}

TEST_CASE("uncubify") {
  const auto pyramid = fixtures::load("square_pyramid");
  const auto [m, rec] = cubify(pyramid);
  const auto c = four_color_bruteforce(dual(m));
  REQUIRE(c);
  const Coloring back = uncubify(*c, rec);
  CHECK(back.size() == 5);
  for (const auto& [a, b] : dual(pyramid).edges) CHECK(back.at(a) != back.at(b));

  Coloring missing = *c;
  missing.erase("s1");
  CHECK_THROWS_AS(uncubify(missing, rec), InputError);

  const Coloring same{{"F1", 0}, {"F2", 1}};
  CHECK(uncubify(same, CubifyRecord{}) == same);
}

TEST_CASE("components and island sub-maps") {
  const auto m = fixtures::load("nested_island");
  const auto comps = m.components();
  CHECK(comps.size() == 3);
  for (const auto& comp : comps) CHECK(validate_map(component_submap(m, comp)).ok());
}

TEST_CASE("JSON round trip") {
  for (const auto* name : {"cube", "island", "nested_island"}) {
    const auto m = fixtures::load(name);
    CHECK(map_from_json(map_to_json(m)) == m);
  }
  const Coloring c{{"a", 0}, {"b", 3}};
  CHECK(coloring_from_json(coloring_to_json(c)) == c);
  CHECK_THROWS_AS(map_from_json(nlohmann::json::array()), InputError);
  CHECK_THROWS_AS(coloring_from_json({{"colors", {{"a", 7}}}}), InputError);
}
