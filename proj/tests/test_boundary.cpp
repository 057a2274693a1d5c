#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "fourcolor/boundary.hpp"
#include "fourcolor/errors.hpp"
#include "fourcolor/primitive_set.hpp"

using namespace fourcolor;

namespace {

int count_kind(const BoundaryState& s, IntervalKind kind) {
  int n = 0;
  for (const auto& iv : s.intervals()) n += iv.kind == kind;
  return n;
}

}  // namespace

TEST_CASE("seeding") {
  const auto tetra = fixtures::load("tetrahedron");
  const auto s = seed_boundary(tetra, "F4", 0);
  CHECK(s.k() == 3);
  for (const auto& iv : s.intervals()) CHECK(iv.faces == std::set<FaceId>{"F4"});
  CHECK(BoundaryState::polygon(5, 0).k() == 5);
  CHECK_THROWS_AS(seed_boundary(tetra, "nope", 0), InputError);

  // Two-face sphere: no vertex points outward.
  CHECK(seed_boundary(fixtures::load("digon"), "A", 0).k() == 1);
}

TEST_CASE("interval algebra of single attachments") {
  SUBCASE("k=6, n=3") {
    CHECK(attach(BoundaryState::polygon(6, 0), {0, 3, 1}).k() == 7);
  }
  SUBCASE("k=5, n=2 creates one new interval") {
    const auto s = attach(BoundaryState::polygon(5, 0), {2, 2, 1});
    CHECK(s.k() == 5);
    CHECK(count_kind(s, IntervalKind::New) == 1);
    CHECK(count_kind(s, IntervalKind::Boundary) == 2);
  }
  SUBCASE("k=5, n=0 merges the neighbors") {
    const auto before = BoundaryState::polygon(5, 0);
    const auto ivs = before.intervals();
    const auto s = attach(before, {2, 0, 1});
    CHECK(s.k() == 3);
    // Interval 0 after the attachment runs over old intervals 1..3.
    const auto merged = s.intervals().front().arc;
    CHECK(merged.front() == ivs[1].arc.front());
    CHECK(merged.back() == ivs[3].arc.back());
    CHECK(merged.size() == 4);
  }
  SUBCASE("k=2 and k=3 edge cases") {
    CHECK(attach(BoundaryState::polygon(2, 0), {0, 0, 1}).k() == 1);
    CHECK(attach(BoundaryState::polygon(2, 0), {0, 3, 1}).k() == 3);
    CHECK(attach(BoundaryState::polygon(3, 0), {1, 1, 1}).k() == 2);
    CHECK_THROWS_AS(attach(BoundaryState::polygon(3, 0), {0, 0, 1}), IllegalAttachment);
    CHECK_THROWS_AS(attach(BoundaryState::polygon(2, 0), {0, 1, 1}), IllegalAttachment);
    CHECK_THROWS_AS(attach(BoundaryState::polygon(4, 0), {4, 1, 1}), IllegalAttachment);
  }
}

TEST_CASE("random attachments keep the boundary consistent") {
  std::mt19937_64 rng(11);
  for (int run = 0; run < 200; ++run) {
    BoundaryState s = BoundaryState::polygon(std::uniform_int_distribution<int>(3, 7)(rng), 0);
    for (int step = 0; step < 6 && s.k() >= 2; ++step) {
      const int k = s.k();
      const int i = std::uniform_int_distribution<int>(0, k - 1)(rng);
      const int n = std::uniform_int_distribution<int>(0, 3)(rng);
      if (!attachment_allowed(k, n)) continue;
      s = attach(s, {i, n, 0});
      CHECK(s.k() == interval_count_after(k, n));
      // Intervals partition the ring: consecutive arcs share endpoints and
      // together cover every ring edge once.
      const auto ivs = s.intervals();
      std::size_t edges = 0;
      for (std::size_t j = 0; j < ivs.size(); ++j) {
        edges += ivs[j].arc.size() - 1;
        if (ivs.size() > 1) CHECK(ivs[j].arc.back() == ivs[(j + 1) % ivs.size()].arc.front());
      }
      CHECK(edges == s.ring().size());
      CHECK(validate_map(s.closed_fragment()).ok());
    }
  }
}

TEST_CASE("attachable intervals on concrete maps") {
  const auto tetra = fixtures::load("tetrahedron");
  const auto s = seed_boundary(tetra, "F4", 0);
  for (int i = 0; i < 3; ++i) {
    const auto a = attachable_along(s, tetra, i);
    REQUIRE(a);
    CHECK(tetra.walk(a->face).size() == 3);
    CHECK(a->n == 1);
  }
  auto s2 = s;
  for (int step = 0; step < 2; ++step) {
    const auto a = find_attachable_interval(s2, tetra);
    REQUIRE(a);
    s2 = attach_region(s2, a->interval, a->face, a->new_points, static_cast<Color>(step + 1));
  }
  CHECK(s2.k() == 1);
  CHECK(exterior_faces(s2, tetra).size() == 1);
  CHECK_FALSE(find_attachable_interval(s2, tetra).has_value());
}

TEST_CASE("a face touching two arcs is skipped for one in its pocket") {
  const auto m = fixtures::pocket_map();
  const auto s = seed_boundary(m, "S", 0);
  REQUIRE(s.k() == 4);
  CHECK_FALSE(attachable_along(s, m, 0).has_value());
  const auto direct = find_attachable_interval(s, m);
  REQUIRE(direct);
  CHECK(direct->face == "Y1");
  CHECK(direct->n == 3);
  const auto nested = find_attachable_nested(s, m);
  REQUIRE(nested);
  CHECK(nested->face == "Y1");
}

TEST_CASE("closing the last face") {
  SUBCASE("digon sphere") {
    const auto m = fixtures::load("digon");
    const auto c = close(seed_boundary(m, "A", 0), m, 1);
    CHECK(c == Coloring{{"A", 0}, {"B", 1}});
  }
  SUBCASE("forced fourth color") {
    const auto tetra = fixtures::load("tetrahedron");
    auto s = seed_boundary(tetra, "F4", 0);
    for (Color col = 1; col <= 2; ++col) {
      const auto a = find_attachable_interval(s, tetra);
      REQUIRE(a);
      s = attach_region(s, a->interval, a->face, a->new_points, col);
    }
    const auto c = close(s, tetra, 3);
    CHECK(c.size() == 4);
    for (Color bad = 0; bad < 3; ++bad) CHECK_THROWS_AS(close(s, tetra, bad), ClosureError);
  }
  SUBCASE("unreduced boundary") {
    const auto s = attach(BoundaryState::polygon(3, 0), {0, 1, 1});
    REQUIRE(s.k() == 2);
    CHECK_THROWS_WITH_AS(close(s, "outer", 2), doctest::Contains("boundary not reduced"), ClosureError);
  }
}
