#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "sepmatch/geometry.hpp"

using namespace sepmatch;

namespace {

std::vector<rpoint> lattice_ball_l1(const rpoint& center, long long r) {
  std::vector<rpoint> out;
  long long cx = rat_floor(center.x), cy = rat_floor(center.y);
  metric m{metric_kind::l1, 1, 1};
  for (long long x = cx - r - 1; x <= cx + r + 1; ++x)
    for (long long y = cy - r - 1; y <= cy + r + 1; ++y)
      if (within(m, center, {rat(x), rat(y)}, rat(r))) out.push_back({rat(x), rat(y)});
  return out;
}

rat sq(const rat& v) { return v * v; }

}  // namespace

TEST_CASE("distance formulas") {
  metric l1{metric_kind::l1, 1, 1};
  CHECK(distance(l1, {rat(0), rat(0)}, {rat(1), rat(2)}) == rat(3));
  metric l2{metric_kind::l2, 1, 1};
  CHECK(distance(l2, {rat(0), rat(0)}, {rat(3), rat(4)}) == rat(25));  // squared
  metric wl{metric_kind::wlinf, rat(2), rat(1)};
  CHECK(distance(wl, {rat(0), rat(0)}, {rat(4), rat(1)}) == rat(2));
  metric li{metric_kind::linf, 1, 1};
  CHECK(distance(li, {rat(1), rat(1)}, {rat(4), rat(3)}) == rat(3));
}

TEST_CASE("distance is a metric on sampled rational points") {
  std::vector<rpoint> pts;
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) pts.push_back({rat(i, 2), rat(j, 3)});
  for (auto kind : {metric_kind::l1, metric_kind::linf, metric_kind::wlinf}) {
    metric m{kind, rat(3, 2), rat(2)};
    for (const auto& p : pts)
      for (const auto& q : pts) {
        CHECK(distance(m, p, q) == distance(m, q, p));
        CHECK((distance(m, p, q) == rat(0)) == (p == q));
      }
    for (std::size_t i = 0; i < pts.size(); i += 3)
      for (std::size_t j = 1; j < pts.size(); j += 4)
        for (std::size_t k = 2; k < pts.size(); k += 5)
          CHECK(distance(m, pts[i], pts[k]) <=
                distance(m, pts[i], pts[j]) + distance(m, pts[j], pts[k]));
  }
  // l2 triangle inequality via squared forms: d(pq) <= d(pj) + d(jk) iff
  // (dpq2 - dpj2 - djk2)^2 <= 4 dpj2 djk2 whenever the left side is positive
  metric m2{metric_kind::l2, 1, 1};
  for (std::size_t i = 0; i < pts.size(); i += 3)
    for (std::size_t j = 1; j < pts.size(); j += 4)
      for (std::size_t k = 2; k < pts.size(); k += 5) {
        rat a = distance(m2, pts[i], pts[k]);
        rat b = distance(m2, pts[i], pts[j]);
        rat c = distance(m2, pts[j], pts[k]);
        rat gap = a - b - c;
        bool holds = gap <= rat(0) || sq(gap) <= rat(4) * b * c;
        CHECK(holds);
      }
}

TEST_CASE("covering bounds") {
  CHECK(covering_bound(metric{metric_kind::l1, 1, 1}) == 4);
  CHECK(covering_bound(metric{metric_kind::linf, 1, 1}) == 4);
  CHECK(covering_bound(metric{metric_kind::wlinf, rat(2), rat(1)}) == 4);
  CHECK(covering_bound(metric{metric_kind::l2, 1, 1}) == 6);
  auto hexagon = make_polygon_norm({{rat(2), rat(0)},
                                    {rat(1), rat(2)},
                                    {rat(-1), rat(2)},
                                    {rat(-2), rat(0)},
                                    {rat(-1), rat(-2)},
                                    {rat(1), rat(-2)}});
  CHECK(covering_bound(hexagon) == 25);
}

TEST_CASE("cover_sets for l1 are the four shifted half-balls") {
  metric m{metric_kind::l1, 1, 1};
  auto regions = cover_sets(m, {rat(0), rat(0)}, rat(2));
  REQUIRE(regions.size() == 4);
  // centers (0,1),(0,-1),(1,0),(-1,0), radius 1
  CHECK(regions[0].contains({rat(0), rat(2)}));
  CHECK(regions[1].contains({rat(0), rat(-2)}));
  CHECK(regions[2].contains({rat(2), rat(0)}));
  CHECK(regions[3].contains({rat(-2), rat(0)}));
  CHECK_FALSE(regions[0].contains({rat(2), rat(0)}));
}

TEST_CASE("cover_sets at r = 0 contain exactly the center") {
  for (auto kind : {metric_kind::l1, metric_kind::linf, metric_kind::wlinf,
                    metric_kind::l2}) {
    metric m{kind, rat(2), rat(1)};
    auto regions = cover_sets(m, {rat(1), rat(1)}, rat(0));
    for (const auto& reg : regions) {
      CHECK(reg.contains({rat(1), rat(1)}));
      CHECK_FALSE(reg.contains({rat(1), rat(2)}));
    }
  }
}

TEST_CASE("l2 sectors cover the disk and have diameter at most r") {
  metric m{metric_kind::l2, 1, 1};
  rat r{1};
  auto regions = cover_sets(m, {rat(0), rat(0)}, r);
  REQUIRE(regions.size() == 6);

  bool boundary_in_some = false;
  for (const auto& reg : regions) boundary_in_some |= reg.contains({rat(1), rat(0)});
  CHECK(boundary_in_some);

  // rational samples inside the unit disk, plus near-boundary points
  std::vector<rpoint> samples;
  for (int i = -8; i <= 8; ++i)
    for (int j = -8; j <= 8; ++j) {
      rpoint q{rat(i, 8), rat(j, 8)};
      if (distance(m, {rat(0), rat(0)}, q) <= rat(1)) samples.push_back(q);
    }
  auto rep = verify_cover(m, {rat(0), rat(0)}, r, samples);
  CHECK(rep.uncovered.empty());
  CHECK(rep.max_within_set_distance <= r * r);  // squared comparison
}

TEST_CASE("verify_cover on the 13-point l1 lattice ball") {
  metric m{metric_kind::l1, 1, 1};
  auto samples = lattice_ball_l1({rat(0), rat(0)}, 2);
  REQUIRE(samples.size() == 13);
  auto rep = verify_cover(m, {rat(0), rat(0)}, rat(2), samples);
  CHECK(rep.uncovered.empty());
  CHECK(rep.max_within_set_distance == rat(2));
}

TEST_CASE("verify_cover with r = 0 and the center sample") {
  metric m{metric_kind::l1, 1, 1};
  auto rep = verify_cover(m, {rat(3), rat(5)}, rat(0), {{rat(3), rat(5)}});
  CHECK(rep.uncovered.empty());
  CHECK(rep.max_within_set_distance == rat(0));
}

TEST_CASE("quadrant rectangles cover linf and wlinf balls on samples") {
  for (auto kind : {metric_kind::linf, metric_kind::wlinf}) {
    metric m{kind, rat(3, 2), rat(1, 2)};
    rat r{2};
    std::vector<rpoint> samples;
    for (int i = -12; i <= 12; ++i)
      for (int j = -12; j <= 12; ++j) samples.push_back({rat(i, 3), rat(j, 3)});
    auto rep = verify_cover(m, {rat(0), rat(0)}, r, samples);
    CHECK(rep.uncovered.empty());
    CHECK(rep.max_within_set_distance <= r);
  }
}

TEST_CASE("the four half-balls tile the l1 lattice ball exactly") {
  for (auto center : {rpoint{rat(0), rat(0)}, rpoint{rat(3), rat(5)}}) {
    for (long long r = 0; r <= 6; r += 2) {
      auto ball = lattice_ball_l1(center, r);
      auto regions = cover_sets(metric{metric_kind::l1, 1, 1}, center, rat(r));
      std::set<std::pair<long long, long long>> in_ball, in_union;
      for (const auto& q : ball) in_ball.insert({rat_floor(q.x), rat_floor(q.y)});
      long long cx = rat_floor(center.x), cy = rat_floor(center.y);
      for (long long x = cx - r - 2; x <= cx + r + 2; ++x)
        for (long long y = cy - r - 2; y <= cy + r + 2; ++y)
          for (const auto& reg : regions)
            if (reg.contains({rat(x), rat(y)})) in_union.insert({x, y});
      CHECK(in_ball == in_union);
    }
  }
}

TEST_CASE("greedy_ball_cover stays within 25 centers and covers the samples") {
  auto l1 = make_metric_norm(metric{metric_kind::l1, 1, 1});
  auto centers = greedy_ball_cover(l1, rat(2), rat(1, 4));
  CHECK(centers.size() <= 25);
  // every integer point of the radius-2 ball is a sample, hence covered
  for (const auto& q : lattice_ball_l1({rat(0), rat(0)}, 2)) {
    bool covered = false;
    for (const auto& c : centers) covered |= norm_contains(l1, c, rat(1), q);
    CHECK(covered);
  }

  CHECK(greedy_ball_cover(l1, rat(0), rat(1, 4)) == std::vector<rpoint>{rpoint{}});

  auto l2 = make_metric_norm(metric{metric_kind::l2, 1, 1});
  CHECK(greedy_ball_cover(l2, rat(1), rat(1, 8)).size() <= 25);
}

TEST_CASE("greedy_ball_cover works for polygonal norms") {
  auto square = make_polygon_norm(
      {{rat(1), rat(1)}, {rat(-1), rat(1)}, {rat(-1), rat(-1)}, {rat(1), rat(-1)}});
  auto stretched = make_polygon_norm(
      {{rat(2), rat(0)}, {rat(0), rat(1)}, {rat(-2), rat(0)}, {rat(0), rat(-1)}});
  auto hexagon = make_polygon_norm({{rat(2), rat(0)},
                                    {rat(1), rat(2)},
                                    {rat(-1), rat(2)},
                                    {rat(-2), rat(0)},
                                    {rat(-1), rat(-2)},
                                    {rat(1), rat(-2)}});
  for (const auto& n : {square, stretched, hexagon}) {
    auto centers = greedy_ball_cover(n, rat(2), rat(1, 4));
    CHECK(!centers.empty());
    CHECK(centers.size() <= 25);
  }
}

TEST_CASE("invalid unit balls are rejected") {
  CHECK_THROWS_AS(make_polygon_norm({{rat(1), rat(0)}, {rat(0), rat(1)}, {rat(-1), rat(0)}}),
                  invalid_norm_error);
  // symmetric but non-convex (arrowhead)
  CHECK_THROWS_AS(make_polygon_norm({{rat(2), rat(0)},
                                     {rat(0), rat(2)},
                                     {rat(1), rat(0)},
                                     {rat(-2), rat(0)},
                                     {rat(0), rat(-2)},
                                     {rat(-1), rat(0)}}),
                  invalid_norm_error);
  auto ok = make_polygon_norm(
      {{rat(1), rat(1)}, {rat(-1), rat(1)}, {rat(-1), rat(-1)}, {rat(1), rat(-1)}});
  CHECK_THROWS_AS(greedy_ball_cover(ok, rat(1), rat(0)), invalid_norm_error);
}
