#include <catch2/catch_amalgamated.hpp>

#include "sepmatch/generate.hpp"
#include "sepmatch/io.hpp"

#include "fixtures.hpp"

using namespace sepmatch;
using namespace sepmatch::testing;

TEST_CASE("serialized gadget example parses back to the same fields") {
  instance g = example_gadget();
  instance back = parse_instance(serialize_instance(g));
  CHECK(back.a_count == 8);
  CHECK(back.b_count == 18);
  CHECK(back.s == rat(1));
  CHECK(back == g);
}

TEST_CASE("parse/serialize round-trips on every variant") {
  int seed = 0;
  for (auto kind : all_variants()) {
    for (int i = 0; i < 10; ++i) {
      instance g = make_variant_instance(kind, 1000 + seed++, 25);
      CHECK(parse_instance(serialize_instance(g)) == g);
    }
  }
  // weighted path instance
  instance w = gen_random_path(4, 9, 2, 0.4, 7, 1, false, true);
  CHECK(parse_instance(serialize_instance(w)) == w);
  // groups / bilateral flags survive
  instance grp = gen_random_path(3, 9, 1, 0.4, 8, 2, false);
  CHECK(parse_instance(serialize_instance(grp)) == grp);
  instance bil = gen_random_path(3, 9, 1, 0.4, 9, 1, true);
  CHECK(parse_instance(serialize_instance(bil)) == bil);
}

TEST_CASE("rational fields accept numbers and p/q strings") {
  instance g = parse_instance(R"({"dim":"grid","a":1,"b":[3,3],"s":"3/2",
    "metric":"l2","edges":[[1,[1,1]]]})");
  CHECK(g.s == rat(3, 2));
  g = parse_instance(R"({"dim":"grid","a":1,"b":[3,3],"s":0.5,
    "metric":"linf","edges":[]})");
  CHECK(g.s == rat(1, 2));
  CHECK_THROWS_AS(
      parse_instance(R"({"dim":"grid","a":1,"b":[3,3],"s":0.1,
        "metric":"l2","edges":[]})"),
      parse_error);  // 0.1 is not an exact small rational
}

TEST_CASE("rational parsing corner cases") {
  CHECK(parse_rat("-3/2") == rat(-3, 2));
  CHECK(parse_rat("7") == rat(7));
  CHECK(parse_rat("4/6") == rat(2, 3));
  CHECK_THROWS_AS(parse_rat("5/0"), parse_error);
  CHECK_THROWS_AS(parse_rat("1.5"), parse_error);
  CHECK_THROWS_AS(parse_rat("a/b"), parse_error);
  CHECK_THROWS_AS(parse_rat(""), parse_error);
  CHECK(rat_from_double(2.5) == rat(5, 2));
  CHECK(rat_from_double(-0.25) == rat(-1, 4));
  CHECK(rat_from_double(12.0) == rat(12));
  CHECK_THROWS_AS(rat_from_double(0.1), parse_error);
  CHECK(to_string(rat(5, 2)) == "5/2");
  CHECK(to_string(rat(-4)) == "-4");
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_instance("{"), parse_error);
  CHECK_THROWS_AS(parse_instance(R"({"dim":"path","a":1,"b":3,"s":-1,"edges":[]})"),
                  parse_error);
  CHECK_THROWS_AS(
      parse_instance(R"({"dim":"path","a":1,"b":3,"s":1,"edges":[],"bogus":1})"),
      parse_error);
  CHECK_THROWS_AS(parse_instance(R"({"dim":"path","a":1,"b":3,"s":1})"), parse_error);
  CHECK_THROWS_AS(
      parse_instance(R"({"dim":"path","a":1,"b":3,"s":1,"edges":[],"metric":"l1"})"),
      parse_error);  // metric is grid-only
  CHECK_THROWS_AS(
      parse_instance(R"({"dim":"grid","a":1,"b":[3,3],"s":1,"metric":"l1",
        "edges":[[1,1]]})"),
      parse_error);  // grid edges need [a,[x,y]]
  CHECK_THROWS_AS(
      parse_instance(R"({"dim":"grid","a":1,"b":[3,3],"s":1,"metric":"wlinf",
        "edges":[]})"),
      parse_error);  // wlinf needs wx, wy
}

TEST_CASE("empty edge list is a valid instance") {
  instance g = parse_instance(R"({"dim":"path","a":0,"b":0,"s":0,"edges":[]})");
  CHECK(g.edges.empty());
  CHECK(validate_instance(g).empty());
}

TEST_CASE("matching files round-trip and reject unknown fields") {
  instance g = example_gadget();
  matching m = example_gadget_matching();
  matching back = parse_matching(serialize_matching(g, m), g);
  CHECK(back == m);
  CHECK_THROWS_AS(parse_matching(R"({"pairs":[],"extra":0})", g), parse_error);
}

TEST_CASE("set packing files round-trip") {
  auto sp = example_setpacking();
  auto back = parse_setpacking(serialize_setpacking(sp));
  CHECK(back.universe_size == sp.universe_size);
  CHECK(back.subsets == sp.subsets);
}

TEST_CASE("norm spec files parse rational polygon vertices") {
  auto n = parse_normspec(R"({"polygon":[["3/2",0],[0,1],["-3/2",0],[0,-1]]})");
  REQUIRE(n.polygon.size() == 4);
  CHECK(norm_contains(n, {}, rat(1), rpoint{rat(3, 2), rat(0)}));
  CHECK_FALSE(norm_contains(n, {}, rat(1), rpoint{rat(2), rat(0)}));
  CHECK_THROWS_AS(parse_normspec(R"({"polygon":[[1,0],[0,1],[-1,0]]})"),
                  invalid_norm_error);  // not centrally symmetric
}

TEST_CASE("solve reports serialize with the matching inlined") {
  instance g = example_gadget();
  solve_report rep;
  rep.result = example_gadget_matching();
  rep.value = rat(8);
  rep.algorithm = "brute-force";
  rep.claw_bound = 4;
  rep.guarantee = "exact";
  auto j = ordered_json::parse(serialize_report(g, rep));
  CHECK(j["algorithm"] == "brute-force");
  CHECK(j["value"] == 8);
  CHECK(j["claw_bound"] == 4);
  CHECK(j["matching"]["pairs"].size() == 8);
}

TEST_CASE("instance serialization is deterministic") {
  instance g = make_variant_instance(variant_kind::grid_wlinf, 4242, 20);
  CHECK(serialize_instance(g) == serialize_instance(g));
}
