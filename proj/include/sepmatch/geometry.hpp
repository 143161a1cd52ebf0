#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sepmatch/errors.hpp"
#include "sepmatch/rational.hpp"

namespace sepmatch {

enum class metric_kind { l1, linf, wlinf, l2 };

struct metric {
  metric_kind kind = metric_kind::l1;
  rat wx{1};  // wlinf only
  rat wy{1};
  friend bool operator==(const metric&, const metric&) = default;
};

inline std::string metric_name(metric_kind k) {
  switch (k) {
    case metric_kind::l1: return "l1";
    case metric_kind::linf: return "linf";
    case metric_kind::wlinf: return "wlinf";
    case metric_kind::l2: return "l2";
  }
  return "?";
}

struct rpoint {
  rat x{0};
  rat y{0};
  friend bool operator==(const rpoint&, const rpoint&) = default;
  rpoint operator+(const rpoint& o) const { return {x + o.x, y + o.y}; }
  rpoint operator-(const rpoint& o) const { return {x - o.x, y - o.y}; }
};

// l2 returns the *squared* distance; every comparison against a radius or
// separation bound squares the other side instead of taking a root.
inline rat distance(const metric& m, const rpoint& p, const rpoint& q) {
  rat dx = rabs(p.x - q.x);
  rat dy = rabs(p.y - q.y);
  switch (m.kind) {
    case metric_kind::l1: return dx + dy;
    case metric_kind::linf: return std::max(dx, dy);
    case metric_kind::wlinf: return std::max(dx / m.wx, dy / m.wy);
    case metric_kind::l2: return dx * dx + dy * dy;
  }
  return rat(0);
}

// dist(p, q) <= r, with the l2 square adjustment applied.
inline bool within(const metric& m, const rpoint& p, const rpoint& q, const rat& r) {
  if (r < rat(0)) return false;
  rat d = distance(m, p, q);
  return m.kind == metric_kind::l2 ? d <= r * r : d <= r;
}

// Upper bounds on the covering number: how many diameter-r sets suffice to
// cover a radius-r ball. Not claimed minimal.
inline int covering_bound(const metric& m) {
  return m.kind == metric_kind::l2 ? 6 : 4;
}

struct cover_region {
  std::string name;
  std::function<bool(const rpoint&)> contains;
};

namespace detail {

// sign(a - sqrt(3)*b), computed exactly. a^2 = 3 b^2 has no nonzero rational
// solution, so the squared comparison is safe.
inline int sign_minus_sqrt3(const rat& a, const rat& b) {
  auto sgn = [](const rat& v) { return v > rat(0) ? 1 : (v < rat(0) ? -1 : 0); };
  if (b == rat(0)) return sgn(a);
  rat a2 = a * a;
  rat b23 = rat(3) * b * b;
  if (b > rat(0)) {
    if (a <= rat(0)) return -1;
    return a2 > b23 ? 1 : (a2 < b23 ? -1 : 0);
  }
  if (a >= rat(0)) return 1;
  return a2 > b23 ? -1 : (a2 < b23 ? 1 : 0);
}

// Boundary directions of the six 60-degree sectors, as (ax, bx*sqrt(3)):
// angles 0, 60, 120, 180, 240, 300 degrees.
inline constexpr int sector_ax[6] = {1, 1, -1, -1, -1, 1};
inline constexpr int sector_bx[6] = {0, 1, 1, 0, -1, -1};

// sign of cross(u_k, v) where u_k = (ax, bx*sqrt(3)).
inline int sector_cross(int k, const rpoint& v) {
  return sign_minus_sqrt3(rat(sector_ax[k]) * v.y, rat(sector_bx[k]) * v.x);
}

// v lies (weakly) between boundary rays k and k+1, counterclockwise.
inline bool in_sector(int k, const rpoint& v) {
  return sector_cross(k, v) >= 0 && sector_cross((k + 1) % 6, v) <= 0;
}

}  // namespace detail

// Decomposes the radius-r ball around p into covering_bound(m) closed sets of
// diameter at most r: four shifted half-radius balls for l1 (and the
// rectangle analogue for linf / wlinf), six 60-degree sectors for l2.
inline std::vector<cover_region> cover_sets(const metric& m, const rpoint& p, const rat& r) {
  std::vector<cover_region> out;
  rat half = r / rat(2);
  switch (m.kind) {
    case metric_kind::l1: {
      const rpoint centers[4] = {{p.x, p.y + half},
                                 {p.x, p.y - half},
                                 {p.x + half, p.y},
                                 {p.x - half, p.y}};
      const char* names[4] = {"up", "down", "right", "left"};
      for (int i = 0; i < 4; ++i) {
        rpoint c = centers[i];
        out.push_back({std::string("l1 half-ball ") + names[i],
                       [m, c, half](const rpoint& q) { return within(m, c, q, half); }});
      }
      break;
    }
    case metric_kind::linf:
    case metric_kind::wlinf: {
      rat sx = m.kind == metric_kind::wlinf ? m.wx * half : half;
      rat sy = m.kind == metric_kind::wlinf ? m.wy * half : half;
      const int qx[4] = {1, 1, -1, -1};
      const int qy[4] = {1, -1, -1, 1};
      for (int i = 0; i < 4; ++i) {
        rpoint c{p.x + rat(qx[i]) * sx, p.y + rat(qy[i]) * sy};
        out.push_back({"quadrant rectangle " + std::to_string(i),
                       [m, c, half](const rpoint& q) { return within(m, c, q, half); }});
      }
      break;
    }
    case metric_kind::l2: {
      for (int k = 0; k < 6; ++k) {
        out.push_back({"60-degree sector " + std::to_string(k),
                       [m, p, r, k](const rpoint& q) {
                         if (!within(m, p, q, r)) return false;
                         return detail::in_sector(k, q - p);
                       }});
      }
      break;
    }
  }
  return out;
}

struct cover_report {
  std::vector<rpoint> uncovered;   // sample points in the ball missed by every set
  rat max_within_set_distance{0};  // metric value (squared for l2)
};

inline cover_report verify_cover(const metric& m, const rpoint& p, const rat& r,
                                 const std::vector<rpoint>& samples) {
  auto regions = cover_sets(m, p, r);
  cover_report rep;
  std::vector<std::vector<rpoint>> members(regions.size());
  for (const auto& q : samples) {
    bool covered = false;
    for (std::size_t i = 0; i < regions.size(); ++i) {
      if (regions[i].contains(q)) {
        covered = true;
        members[i].push_back(q);
      }
    }
    if (!covered && within(m, p, q, r)) rep.uncovered.push_back(q);
  }
  for (const auto& mem : members) {
    for (std::size_t i = 0; i < mem.size(); ++i)
      for (std::size_t j = i + 1; j < mem.size(); ++j)
        rep.max_within_set_distance =
            std::max(rep.max_within_set_distance, distance(m, mem[i], mem[j]));
  }
  return rep;
}

// A norm given either as one of the built-in metrics or as a convex,
// centrally symmetric polygonal unit ball (counterclockwise vertex list).
struct norm_spec {
  std::optional<metric> builtin;
  std::vector<rpoint> polygon;
  friend bool operator==(const norm_spec&, const norm_spec&) = default;
};

inline norm_spec make_metric_norm(const metric& m) { return {m, {}}; }

namespace detail {

inline rat cross(const rpoint& u, const rpoint& v) { return u.x * v.y - u.y * v.x; }

inline void check_polygon(const std::vector<rpoint>& poly) {
  if (poly.size() < 4)
    throw invalid_norm_error("polygonal unit ball needs at least 4 vertices");
  // central symmetry: the vertex set must be closed under negation
  for (const auto& v : poly) {
    rpoint n{-v.x, -v.y};
    if (std::find(poly.begin(), poly.end(), n) == poly.end())
      throw invalid_norm_error("unit ball is not centrally symmetric");
  }
  // convexity in the given cyclic order, all turns weakly the same way
  rat area2{0};
  std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const rpoint& a = poly[i];
    const rpoint& b = poly[(i + 1) % n];
    const rpoint& c = poly[(i + 2) % n];
    if (a == b) throw invalid_norm_error("repeated polygon vertex");
    if (cross(b - a, c - b) < rat(0))
      throw invalid_norm_error("unit ball polygon is not convex");
    area2 += cross(a, b);
  }
  if (area2 <= rat(0)) throw invalid_norm_error("degenerate unit ball polygon");
}

}  // namespace detail

// Validates and orients the polygon (counterclockwise).
inline norm_spec make_polygon_norm(std::vector<rpoint> vertices) {
  rat area2{0};
  std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i)
    area2 += detail::cross(vertices[i], vertices[(i + 1) % n]);
  if (area2 < rat(0)) std::reverse(vertices.begin(), vertices.end());
  detail::check_polygon(vertices);
  return {std::nullopt, std::move(vertices)};
}

inline int covering_bound(const norm_spec& n) {
  if (n.builtin) return covering_bound(*n.builtin);
  return 25;  // generic norm bound
}

// q in the radius-rho ball of the norm centered at c.
inline bool norm_contains(const norm_spec& n, const rpoint& c, const rat& rho, const rpoint& q) {
  if (rho < rat(0)) return false;
  if (n.builtin) return within(*n.builtin, c, q, rho);
  rpoint v = q - c;
  if (rho == rat(0)) return v == rpoint{};
  std::size_t m = n.polygon.size();
  for (std::size_t i = 0; i < m; ++i) {
    rpoint a = n.polygon[i];
    rpoint b = n.polygon[(i + 1) % m];
    // v/rho left of edge a->b  <=>  cross(b-a, v - rho*a) >= 0
    if (detail::cross(b - a, {v.x - rho * a.x, v.y - rho * a.y}) < rat(0)) return false;
  }
  return true;
}

inline long long rat_floor(const rat& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r < rat(0)) --q;
  return q;
}

inline long long rat_ceil(const rat& r) { return -rat_floor(-r); }

// Greedy half-radius cover of the radius-r ball around the origin, executed
// on a pitch-spaced sample grid: while some sample is uncovered, the
// lexicographically first such sample becomes a new center. The triangle
// inequality caps the result at 25 centers for any norm.
inline std::vector<rpoint> greedy_ball_cover(const norm_spec& norm, const rat& r,
                                             const rat& pitch) {
  if (norm.builtin) {
    if (norm.builtin->kind == metric_kind::wlinf &&
        (norm.builtin->wx <= rat(0) || norm.builtin->wy <= rat(0)))
      throw invalid_norm_error("wlinf weights must be positive");
  } else {
    detail::check_polygon(norm.polygon);
  }
  if (r < rat(0)) throw invalid_norm_error("radius must be nonnegative");
  if (r == rat(0)) return {rpoint{}};
  if (pitch <= rat(0)) throw invalid_norm_error("pitch must be positive");

  rat extent = r;
  if (norm.builtin) {
    if (norm.builtin->kind == metric_kind::wlinf)
      extent = r * std::max(norm.builtin->wx, norm.builtin->wy);
  } else {
    rat mx{0};
    for (const auto& v : norm.polygon) mx = std::max(mx, std::max(rabs(v.x), rabs(v.y)));
    extent = r * mx;
  }

  std::vector<rpoint> samples;
  long long lo = rat_ceil(-extent / pitch);
  long long hi = rat_floor(extent / pitch);
  for (long long i = lo; i <= hi; ++i) {
    for (long long j = lo; j <= hi; ++j) {
      rpoint q{rat(i) * pitch, rat(j) * pitch};
      if (norm_contains(norm, rpoint{}, r, q)) samples.push_back(q);
    }
  }

  rat half = r / rat(2);
  std::vector<char> covered(samples.size(), 0);
  std::vector<rpoint> centers;
  for (;;) {
    std::size_t first = samples.size();
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (!covered[i]) {
        first = i;
        break;
      }
    }
    if (first == samples.size()) break;
    rpoint c = samples[first];
    centers.push_back(c);
    for (std::size_t i = first; i < samples.size(); ++i)
      if (!covered[i] && norm_contains(norm, c, half, samples[i])) covered[i] = 1;
  }
  return centers;
}

}  // namespace sepmatch
