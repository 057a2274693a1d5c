#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "fourcolor/errors.hpp"
#include "fourcolor/generator.hpp"
#include "fourcolor/oracle.hpp"
#include "fourcolor/pipeline.hpp"

using namespace fourcolor;

TEST_CASE("verify_coloring") {
  const auto tetra = fixtures::load("tetrahedron");
  CHECK(verify_coloring(tetra, {{"F1", 0}, {"F2", 1}, {"F3", 2}, {"F4", 3}}).ok);
  const auto bad = verify_coloring(tetra, {{"F1", 0}, {"F2", 0}, {"F3", 2}, {"F4", 3}});
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations.front() == std::pair<FaceId, FaceId>{"F1", "F2"});
  CHECK_THROWS_AS(verify_coloring(tetra, {{"F1", 0}}), InputError);
}

TEST_CASE("fixed corpus colors without fallback") {
  for (const auto* name : {"digon", "tetrahedron", "cube", "square_pyramid", "island", "nested_island"}) {
    INFO(name);
    const auto m = fixtures::load(name);
    PipelineOptions o;
    o.check_oracle = true;
    const auto run = color_with_islands(m, 0, o);
    CHECK(run.verified);
    CHECK(verify_coloring(m, run.coloring).ok);
    CHECK_FALSE(run.used_fallback);
    CHECK(run.violations.empty());
    for (const auto& c : run.components) {
      CHECK(c.oracle_mismatches == 0);
      for (const auto& step : c.trace) CHECK(step.schemes_after > 0);
    }
  }
}

TEST_CASE("specific corpus outcomes") {
  const auto tetra = color_map(fixtures::load("tetrahedron"), std::nullopt, 0);
  std::set<Color> used;
  for (const auto& [f, c] : tetra.coloring) used.insert(c);
  CHECK(used.size() == 4);

  const auto digon = color_map(fixtures::load("digon"), std::nullopt, 0);
  CHECK(digon.coloring == Coloring{{"A", 0}, {"B", 1}});

  const auto cube = color_map(fixtures::load("cube"), std::nullopt, 0);
  CHECK(cube.verified);
  CHECK_FALSE(cube.used_fallback);

  const auto nested = color_with_islands(fixtures::load("nested_island"), 0);
  CHECK(nested.components.size() == 3);
}

TEST_CASE("island-free maps: both entry points agree") {
  const auto m = fixtures::load("cube");
  const auto a = color_map(m, std::nullopt, 5);
  const auto b = color_with_islands(m, 5);
  CHECK(a.coloring == b.coloring);
  CHECK(a.to_json()["components"] == b.to_json()["components"]);
  CHECK_THROWS_AS(color_map(fixtures::load("island"), std::nullopt, 0), InputError);
}

TEST_CASE("determinism and trace replay") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto m = generate_map(6 + static_cast<int>(seed), seed);
    const auto r1 = color_map(m, std::nullopt, seed);
    const auto r2 = color_map(m, std::nullopt, seed);
    CHECK(r1.coloring == r2.coloring);
    CHECK(r1.to_json()["components"] == r2.to_json()["components"]);
    REQUIRE(r1.components.size() == 1);
    const auto& c = r1.components.front();
    if (c.used_fallback) continue;
    const auto state = replay_trace(c);
    CHECK(state.k() == 1);
    for (const auto& [f, col] : state.colors()) CHECK(c.coloring.at(f) == col);
    CHECK(exterior_faces(state, c.working) == std::vector<FaceId>{*c.closure_face});
  }
}

TEST_CASE("seed face choice") {
  const auto m = fixtures::load("cube");
  for (const auto& f : m.face_ids()) {
    PipelineOptions o;
    o.seed_color = 2;
    const auto run = color_map(m, f, 0, o);
    CHECK(run.verified);
    CHECK(run.coloring.at(f) == 2);
  }
  CHECK_THROWS_AS(color_map(m, FaceId("missing"), 0), InputError);
}

TEST_CASE("errors") {
  PipelineOptions small;
  small.max_faces = 5;
  CHECK_THROWS_AS(color_map(fixtures::load("cube"), std::nullopt, 0, small), ScaleLimitError);
  const PlanarMap invalid({{"A", {"a", "b", "c"}}});
  CHECK_THROWS_AS(color_map(invalid, std::nullopt, 0), InputError);
}

TEST_CASE("sea faces") {
  CHECK(find_sea_faces(fixtures::load("island")) == std::vector<FaceId>{"sea"});
  const auto nested = find_sea_faces(fixtures::load("nested_island"));
  CHECK(nested == std::vector<FaceId>{"I1", "sea"});
  CHECK(find_sea_faces(fixtures::load("cube")).empty());
}
