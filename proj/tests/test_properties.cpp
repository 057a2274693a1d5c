#include <random>

#include "doctest.h"
#include "fourcolor/errors.hpp"
#include "fourcolor/harness.hpp"
#include "fourcolor/properties.hpp"

using namespace fourcolor;

namespace {

PackedScheme scheme(std::initializer_list<Color> xs) { return pack_scheme(std::vector<Color>(xs)); }

SchemeSet random_subset(std::mt19937_64& rng, int k, std::size_t max_size) {
  SchemeSet all = cycle_colorings(k, 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::uniform_int_distribution<std::size_t>(0, std::min(max_size, all.size()))(rng));
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

TEST_CASE("polygon seeds") {
  const auto tri = polygon_primitive_set(3, 0).schemes();
  CHECK(check_property_A(3, tri).holds);
  const auto b3 = check_property_B(3, tri);
  CHECK(b3.outer_colors == std::set<Color>{0});
  for (int k = 4; k <= 7; ++k) {
    const auto s = polygon_primitive_set(k, 0).schemes();
    CHECK(check_property_A(k, s).holds);
    const auto b = check_property_B(k, s);
    CHECK(b.holds);
    CHECK(b.outer_colors.contains(0));
  }
}

TEST_CASE("a failing singleton") {
  const SchemeSet s{scheme({1, 2, 1, 2})};
  const auto a = check_property_A(4, s);
  CHECK_FALSE(a.holds);
  REQUIRE(a.violating_trail);
  CHECK(*a.violating_trail == Trail{{0, 1}});
  CHECK(to_string(a.violating_trail->front()) == "one-point@0");
  CHECK(replay_trail(4, s, *a.violating_trail).second.empty());
  CHECK_FALSE(check_naive(4, s, Property::A).holds);
}

TEST_CASE("all four colors in every scheme") {
  const SchemeSet s{scheme({0, 1, 2, 3}), scheme({1, 0, 3, 2})};
  const auto b = check_property_B(4, s);
  CHECK_FALSE(b.holds);
  CHECK(b.outer_colors.empty());
  REQUIRE(b.violating_trail);
  CHECK(b.violating_trail->empty());
}

TEST_CASE("memoized and naive checkers agree") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = std::uniform_int_distribution<int>(1, 5)(rng);
    const SchemeSet s = random_subset(rng, k, 64);
    for (auto q : {Quantification::Strict, Quantification::Pruned}) {
      for (auto r : {OuterColorReading::OneScheme, OuterColorReading::PerInterval}) {
        PropertyOptions o;
        o.quantification = q;
        o.reading = r;
        const auto a = check_property_A(k, s, o);
        const auto b = check_property_B(k, s, o);
        CHECK(a.holds == check_naive(k, s, Property::A, o).holds);
        const auto nb = check_naive(k, s, Property::B, o);
        CHECK(b.holds == nb.holds);
        CHECK(b.outer_colors == nb.outer_colors);
        if (!a.holds) {
          REQUIRE(a.violating_trail);
          CHECK(replay_trail(k, s, *a.violating_trail).second.empty());
        }
      }
    }
  }
}

TEST_CASE("pruned quantification never fails A below the root") {
  std::mt19937_64 rng(9);
  PropertyOptions o;
  o.quantification = Quantification::Pruned;
  for (int trial = 0; trial < 100; ++trial) {
    const SchemeSet s = random_subset(rng, 5, 40);
    CHECK(check_property_A(5, s, o).holds == !s.empty());
  }
}

TEST_CASE("scale caps") {
  CHECK_THROWS_AS(check_property_A(13, polygon_primitive_set(3, 0).schemes()), ScaleLimitError);
  CHECK_THROWS_AS(check_naive(6, polygon_primitive_set(6, 0).schemes(), Property::A), ScaleLimitError);
  PropertyOptions tiny;
  tiny.max_states = 2;
  CHECK_THROWS_AS(check_property_A(7, polygon_primitive_set(7, 0).schemes(), tiny), ScaleLimitError);
}

TEST_CASE("trail JSON round trip") {
  const Trail t{{0, 1}, {2, 0}};
  CHECK(trail_from_json(trail_to_json(t)) == t);
}
