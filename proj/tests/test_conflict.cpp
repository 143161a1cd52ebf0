#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "sepmatch/conflict.hpp"
#include "sepmatch/exact.hpp"
#include "sepmatch/generate.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace sepmatch;
using namespace sepmatch::testing;

namespace {

instance tiny_path() {
  instance g;
  g.dim = dim_kind::path;
  g.a_count = 2;
  g.b_count = 3;
  g.s = rat(1);
  g.edges = {{1, {1, 0}}, {1, {3, 0}}, {2, {2, 0}}};
  return g;
}

}  // namespace

TEST_CASE("build_conflict applies the variant rule pairwise") {
  // same A-vertex, distance 1, distance 1: a triangle
  auto h = build_conflict(tiny_path());
  REQUIRE(h.n == 3);
  CHECK(h.adjacent(0, 1));
  CHECK(h.adjacent(0, 2));
  CHECK(h.adjacent(1, 2));

  instance single;
  single.dim = dim_kind::path;
  single.a_count = 1;
  single.b_count = 1;
  single.s = rat(1);
  single.edges = {{1, {1, 0}}};
  auto h1 = build_conflict(single);
  CHECK(h1.n == 1);
  CHECK(h1.edge_count() == 0);

  instance grid;
  grid.dim = dim_kind::grid;
  grid.a_count = 2;
  grid.beta1 = grid.beta2 = 2;
  grid.s = rat(1);
  grid.met.kind = metric_kind::l1;
  grid.edges = {{1, {1, 1}}, {2, {1, 2}}};
  auto h2 = build_conflict(grid);
  CHECK(h2.adjacent(0, 1));  // unit step
}

TEST_CASE("claw bounds per variant") {
  instance p = tiny_path();
  CHECK(claw_bound_for(p) == 4);
  p.s = rat(3);
  CHECK(claw_bound_for(p) == 4);
  p.group_size = 3;
  CHECK(claw_bound_for(p) == 4);

  instance bil = tiny_path();
  bil.bilateral = true;
  CHECK(claw_bound_for(bil) == 5);

  instance g;
  g.dim = dim_kind::grid;
  g.met.kind = metric_kind::l1;
  CHECK(claw_bound_for(g) == 6);
  g.met.kind = metric_kind::linf;
  CHECK(claw_bound_for(g) == 6);
  g.met.kind = metric_kind::wlinf;
  CHECK(claw_bound_for(g) == 6);
  g.met.kind = metric_kind::l2;
  CHECK(claw_bound_for(g) == 8);
}

TEST_CASE("find_claw locates stars and respects claw-freeness") {
  auto star = conflict_graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  auto c = find_claw(star, 4);
  REQUIRE(c.has_value());
  CHECK(c->center == 0);
  CHECK(c->talons == std::vector<int>{1, 2, 3, 4});

  auto triangle = conflict_graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_FALSE(find_claw(triangle, 2).has_value());

  auto example_graph = build_conflict(example_gadget());
  CHECK_FALSE(find_claw(example_graph, 4).has_value());
  CHECK(find_claw(example_graph, 3).has_value());  // 3-claws do exist there
}

TEST_CASE("find_claw enforces its size cap and argument checks") {
  auto h = conflict_graph::from_edges(10, {});
  CHECK_THROWS_AS(find_claw(h, 4, 5), size_cap_error);
  CHECK_THROWS_AS(find_claw(h, 0), std::invalid_argument);
}

TEST_CASE("rational metric boundaries are classified exactly") {
  instance g;
  g.dim = dim_kind::grid;
  g.a_count = 4;
  g.beta1 = 5;
  g.beta2 = 5;
  g.s = rat(1);
  g.met = {metric_kind::wlinf, rat(2), rat(1)};
  g.edges = {{1, {1, 1}}, {2, {3, 1}}, {3, {3, 2}}, {4, {4, 1}}};
  auto h = build_conflict(g);
  CHECK(h.adjacent(0, 1));        // max(2/2, 0) = 1 <= s
  CHECK(h.adjacent(0, 2));        // max(2/2, 1/1) = 1 <= s
  CHECK_FALSE(h.adjacent(0, 3));  // max(3/2, 0) > s

  instance l2;
  l2.dim = dim_kind::grid;
  l2.a_count = 3;
  l2.beta1 = l2.beta2 = 4;
  l2.s = rat(3, 2);
  l2.met.kind = metric_kind::l2;
  l2.edges = {{1, {1, 1}}, {2, {2, 2}}, {3, {1, 3}}};
  auto h2 = build_conflict(l2);
  CHECK(h2.adjacent(0, 1));        // squared distance 2 <= (3/2)^2 = 9/4
  CHECK_FALSE(h2.adjacent(0, 2));  // squared distance 4 > 9/4
}

TEST_CASE("adjacency is symmetric and irreflexive on all variants") {
  int seed = 50;
  for (auto kind : all_variants()) {
    instance g = make_variant_instance(kind, seed++, 20);
    auto h = build_conflict(g);
    for (int i = 0; i < h.n; ++i) {
      CHECK_FALSE(h.adjacent(i, i));
      for (int j = 0; j < h.n; ++j) CHECK(h.adjacent(i, j) == h.adjacent(j, i));
    }
  }
}

TEST_CASE("dense and sparse storage behave identically") {
  instance g = make_variant_instance(variant_kind::path, 99, 25);
  auto dense = build_conflict(g);
  auto sparse = build_conflict(g, 0);  // force sparse storage
  REQUIRE(dense.n == sparse.n);
  CHECK(dense.dense);
  CHECK_FALSE(sparse.dense);
  for (int i = 0; i < dense.n; ++i)
    for (int j = 0; j < dense.n; ++j)
      CHECK(dense.adjacent(i, j) == sparse.adjacent(i, j));
}

TEST_CASE("independent sets and feasible matchings correspond") {
  auto g = example_gadget();
  auto h = build_conflict(g);

  CHECK(independent_set_to_matching(h, g, {}).pairs.empty());
  CHECK(matching_to_independent_set(h, g, matching{}).empty());

  auto set = matching_to_independent_set(h, g, example_gadget_matching());
  REQUIRE(set.size() == 8);
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      CHECK_FALSE(h.adjacent(set[i], set[j]));
  matching back = independent_set_to_matching(h, g, set);
  matching expect = example_gadget_matching();
  std::sort(expect.pairs.begin(), expect.pairs.end());
  CHECK(back == expect);
}

TEST_CASE("round trips hold for random feasible matchings on every variant") {
  int seed = 300;
  for (auto kind : all_variants()) {
    for (int i = 0; i < 5; ++i) {
      instance g = make_variant_instance(kind, seed++, 18);
      auto h = build_conflict(g);
      matching m = random_feasible_matching(g, seed);
      auto set = matching_to_independent_set(h, g, m);
      CHECK(independent_set_to_matching(h, g, set) == m);
    }
  }
}

TEST_CASE("correspondence errors on non-independent sets and infeasible matchings") {
  auto g = tiny_path();
  auto h = build_conflict(g);
  CHECK_THROWS_AS(independent_set_to_matching(h, g, {0, 1}), correspondence_error);
  matching bad{{{1, {1, 0}}, {2, {2, 0}}}};  // distance 1 at s = 1
  CHECK_THROWS_AS(matching_to_independent_set(h, g, bad), correspondence_error);
}

TEST_CASE("full enumeration: independent sets equal feasible matchings") {
  int seed = 900;
  for (auto kind : all_variants()) {
    instance g = make_variant_instance(kind, seed++, 12);
    auto h = build_conflict(g);
    auto sets = enumerate_independent_sets(h);
    auto matchings = enumerate_feasible_matchings(g);
    REQUIRE(sets.size() == matchings.size());
    std::set<std::vector<edge>> from_sets, from_enum;
    for (const auto& s : sets)
      from_sets.insert(independent_set_to_matching(h, g, s).pairs);
    for (const auto& m : matchings) from_enum.insert(m.pairs);
    CHECK(from_sets == from_enum);
  }
}

TEST_CASE("conflict dump carries the header and edge lines") {
  auto h = build_conflict(tiny_path());
  CHECK(dump_conflict(h) == "p claw 4 3 3\n0 1\n0 2\n1 2\n");
}
