#include <functional>

#include "doctest.h"
#include "fixtures.hpp"
#include "fourcolor/boundary.hpp"
#include "fourcolor/errors.hpp"
#include "fourcolor/oracle.hpp"

using namespace fourcolor;

namespace {

DualGraph clique(int n) {
  DualGraph g;
  for (int i = 0; i < n; ++i) g.nodes.push_back("f" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.insert({g.nodes[i], g.nodes[j]});
  return g;
}

DualGraph cycle(int n) {
  DualGraph g;
  for (int i = 0; i < n; ++i) g.nodes.push_back("f" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    auto a = g.nodes[i], b = g.nodes[(i + 1) % n];
    g.edges.insert({std::min(a, b), std::max(a, b)});
  }
  return g;
}

// Independent count: every assignment in q^n, no backtracking.
std::uint64_t count_by_assignment(const DualGraph& g, int q) {
  std::map<FaceId, int> idx;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) idx[g.nodes[i]] = static_cast<int>(i);
  std::vector<int> col(g.nodes.size(), 0);
  std::uint64_t total = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == col.size()) {
      for (const auto& [a, b] : g.edges)
        if (col[idx[a]] == col[idx[b]]) return;
      ++total;
      return;
    }
    for (int c = 0; c < q; ++c) {
      col[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return total;
}

}  // namespace

TEST_CASE("four_color_bruteforce") {
  const auto k4 = four_color_bruteforce(clique(4));
  REQUIRE(k4);
  std::set<Color> used;
  for (const auto& [f, c] : *k4) used.insert(c);
  CHECK(used.size() == 4);

  DualGraph empty;
  empty.nodes = {"a", "b", "c"};
  const auto e = four_color_bruteforce(empty);
  REQUIRE(e);
  for (const auto& [f, c] : *e) CHECK(c == 0);

  CHECK_FALSE(four_color_bruteforce(clique(5)).has_value());
  CHECK(count_by_assignment(clique(5), 4) == 0);

  const auto pinned = four_color_bruteforce(clique(4), {{"f0", 3}});
  REQUIRE(pinned);
  CHECK(pinned->at("f0") == 3);
  CHECK_FALSE(four_color_bruteforce(clique(2), {{"f0", 1}, {"f1", 1}}).has_value());
}

TEST_CASE("count_colorings against plain assignment counting") {
  CHECK(count_colorings(clique(4), 4).count == 24);
  CHECK(count_colorings(cycle(4), 3).count == 18);
  CHECK(count_colorings(cycle(5), 3).count == 30);
  CHECK(count_colorings(clique(4), 4).count == count_by_assignment(clique(4), 4));
  for (int n = 3; n <= 7; ++n) {
    for (int q = 2; q <= 4; ++q) {
      CHECK(count_colorings(cycle(n), q).count == count_by_assignment(cycle(n), q));
    }
  }
  CHECK(count_colorings(dual(fixtures::load("cube")), 4).count == count_by_assignment(dual(fixtures::load("cube")), 4));
}

TEST_CASE("reference primitive sets of polygon seeds") {
  const std::vector<std::size_t> expected{6, 18, 30, 66};
  for (int k = 3; k <= 6; ++k) {
    const auto ref = primitive_set_reference(BoundaryState::polygon(k, 0));
    CHECK(ref.size() == expected[static_cast<std::size_t>(k - 3)]);
    // Proper 3-colorings of a k-cycle over {1,2,3}: (3-1)^k + (-1)^k (3-1).
    const long closed = (1L << k) + (k % 2 == 0 ? 2 : -2);
    CHECK(static_cast<long>(ref.size()) == closed);
    CHECK(count_cycle_colorings_bruteforce(k, 1u) == ref.size());
  }
  const auto trigon = primitive_set_reference(BoundaryState::polygon(3, 0));
  for (auto s : trigon.schemes()) {
    std::set<Color> cols{scheme_color(s, 0), scheme_color(s, 1), scheme_color(s, 2)};
    CHECK(cols == std::set<Color>{1, 2, 3});
  }
}

TEST_CASE("oracle caps") {
  CHECK_THROWS_AS(primitive_set_reference(BoundaryState::polygon(13, 0)), ScaleLimitError);
  CHECK_THROWS_AS(count_colorings(clique(17), 4), ScaleLimitError);
}
