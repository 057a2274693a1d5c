#include <regex>

#include "doctest.h"
#include "fixtures.hpp"
#include "fourcolor/errors.hpp"
#include "fourcolor/generator.hpp"
#include "fourcolor/pipeline.hpp"
#include "fourcolor/render.hpp"

using namespace fourcolor;

TEST_CASE("generated maps are valid, cubic and reproducible") {
  for (int faces = 4; faces <= 16; ++faces) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const auto m = generate_map(faces, seed);
      CHECK(static_cast<int>(m.num_faces()) == faces);
      CHECK(validate_map(m).ok());
      CHECK_FALSE(m.has_parallel_edges());
      for (const auto& [v, d] : m.degrees()) CHECK(d == 3);
      CHECK(generate_map(faces, seed) == m);
    }
  }
  CHECK_THROWS_AS(generate_map(3, 0), InputError);
}

TEST_CASE("layout pins the outer walk and keeps others inside") {
  const auto m = fixtures::load("cube");
  const auto pos = tutte_layout(m);
  CHECK(pos.size() == m.num_vertices());
  for (const auto& [v, p] : pos) CHECK(std::hypot(p.first, p.second) <= 1.0 + 1e-9);
}

TEST_CASE("svg has one path per face, filled by color") {
  for (const auto* name : {"digon", "tetrahedron", "cube", "island", "nested_island"}) {
    const auto m = fixtures::load(name);
    const auto run = color_with_islands(m, 0);
    const std::string svg = render_svg(m, run.coloring);
    const std::regex path("<path ");
    const auto count = std::distance(std::sregex_iterator(svg.begin(), svg.end(), path), std::sregex_iterator());
    CHECK(static_cast<std::size_t>(count) == m.num_faces());
    CHECK(svg.find("nan") == std::string::npos);
    for (const auto& f : m.face_ids()) CHECK(svg.find("data-face=\"" + f + "\"") != std::string::npos);
  }
}
