#include <random>

#include "doctest.h"
#include "fourcolor/boundary.hpp"
#include "fourcolor/growth.hpp"
#include "fourcolor/oracle.hpp"
#include "fourcolor/primitive_set.hpp"

using namespace fourcolor;

namespace {

PackedScheme scheme(std::initializer_list<Color> xs) { return pack_scheme(std::vector<Color>(xs)); }

}  // namespace

TEST_CASE("packing") {
  const std::vector<Color> x{1, 2, 3, 0, 2};
  CHECK(unpack_scheme(pack_scheme(x), 5) == x);
  CHECK(scheme_string(pack_scheme(x), 5) == "12302");
  CHECK(scheme_string(rotate_scheme(pack_scheme(x), 5, 2), 5) == "30212");
  CHECK(scheme_is_proper(pack_scheme(x), 5));
  CHECK_FALSE(scheme_is_proper(scheme({1, 2, 1}), 3));
}

TEST_CASE("polygon sets match independent cycle enumeration") {
  CHECK_THROWS(BoundaryState::polygon(1, 0));
  for (int k = 2; k <= 8; ++k) {
    for (Color c = 0; c < kNumColors; ++c) {
      const auto p = initial_primitive_set(BoundaryState::polygon(k, c));
      CHECK(p.size() == count_cycle_colorings_bruteforce(k, 1u << c));
    }
  }
}

TEST_CASE("incremental update examples") {
  const auto tri = BoundaryState::polygon(3, 0);
  const auto p = initial_primitive_set(tri);
  SUBCASE("trigon, one-point at 1") {
    const auto q = update_on_attach(p, 1, 1);
    CHECK(q.k() == 2);
    CHECK(q.size() == 6);
  }
  SUBCASE("trigon, two-point at 0") {
    const auto q = update_on_attach(p, 0, 2);
    const auto after = attach(tri, {0, 2, 0});
    CHECK(q.k() == 3);
    CHECK(q.schemes() == primitive_set_reference(after).schemes());
    // Interval 1 is the new one; it borders the attached region.
    for (std::size_t j = 0; j < q.size(); ++j) CHECK(scheme_color(q.schemes()[j], 1) != q.witness(j).back());
  }
  SUBCASE("singleton (1,2,1,2), one-point at 0") {
    const auto q = update_on_attach(PrimitiveSet::from_schemes(4, {scheme({1, 2, 1, 2})}), 0, 1);
    CHECK(q.empty());
  }
}

TEST_CASE("simple-region filters on the square") {
  const auto full = polygon_primitive_set(4, 0).schemes();
  REQUIRE(full.size() == 18);
  const auto zero = filter_zero(full, 4, 1);
  CHECK(zero.size() == 6);
  for (auto y : zero) CHECK(scheme_is_proper(y, 2));
  const auto one = filter_one(full, 4, 1);
  // Direct count of the constraint x(0) != x(2) over the 18 schemes: the two
  // opposite intervals take distinct colors and force the other pair.
  std::size_t differ = 0;
  for (auto x : full) differ += scheme_color(x, 0) != scheme_color(x, 2);
  CHECK(differ == 6);
  CHECK(one.size() == differ);
  CHECK(filter_one({scheme({1, 2, 1, 2})}, 4, 0).empty());
}

TEST_CASE("incremental sets equal the oracle along random growth") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto rng = indexed_rng(seed, 0);
    GrowthCaps caps;
    caps.max_ops = 6;
    const auto trace = random_growth(rng, 2 + static_cast<int>(seed % 5), caps);
    GrowthTrace prefix{trace.polygon_k, 0, {}};
    for (std::size_t j = 0; j <= trace.ops.size(); ++j) {
      const auto g = replay_growth(prefix);
      CHECK(g.pset.schemes() == primitive_set_reference(g.state).schemes());
      // Every witness realizes its scheme on the concrete fragment.
      for (std::size_t s = 0; s < g.pset.size(); ++s) {
        const auto& w = g.pset.witness(s);
        REQUIRE(w.size() == g.state.interior().size());
        const auto ivs = g.state.interval_faces();
        for (int i = 0; i < g.state.k(); ++i) {
          for (const auto& f : ivs[static_cast<std::size_t>(i)]) {
            const auto pos = std::find(g.state.interior().begin(), g.state.interior().end(), f) - g.state.interior().begin();
            CHECK(w[static_cast<std::size_t>(pos)] != scheme_color(g.pset.schemes()[s], i));
          }
        }
      }
      if (j < trace.ops.size()) prefix.ops.push_back(trace.ops[j]);
    }
  }
}
