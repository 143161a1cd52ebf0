#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sepmatch/errors.hpp"
#include "sepmatch/geometry.hpp"
#include "sepmatch/rational.hpp"

namespace sepmatch {

enum class dim_kind { path, grid };

// One B-side position. Path instances use x (1..b_count) and keep y == 0;
// grid instances use (x, y) with x in [beta1], y in [beta2]. Everything is
// 1-based to match the usual [b] and [beta1] x [beta2] indexing.
struct position {
  int x = 0;
  int y = 0;
  auto operator<=>(const position&) const = default;
};

struct edge {
  int a = 0;
  position b;
  auto operator<=>(const edge&) const = default;
};

struct instance {
  dim_kind dim = dim_kind::path;
  int a_count = 0;
  int b_count = 0;              // path
  int beta1 = 0, beta2 = 0;     // grid
  rat s{0};                     // separation parameter
  metric met;                   // grid only
  int group_size = 1;           // path only: blocks of g consecutive seats
  bool bilateral = false;       // path only: separation on both sides
  std::vector<edge> edges;
  std::optional<std::vector<rat>> weights;  // parallel to edges

  bool weighted() const { return weights.has_value(); }
  rat weight(std::size_t i) const { return weighted() ? (*weights)[i] : rat(1); }
  friend bool operator==(const instance&, const instance&) = default;
};

struct matching {
  std::vector<edge> pairs;
  friend bool operator==(const matching&, const matching&) = default;
};

struct violation {
  std::string field;
  std::optional<std::size_t> index;
  std::string message;
};

inline rpoint to_rpoint(const position& p) { return {rat(p.x), rat(p.y)}; }

// Path-side separation parameters are validated integral; this asserts that.
inline long long s_int(const instance& g) { return g.s.numerator() / g.s.denominator(); }

inline std::vector<violation> validate_instance(const instance& g) {
  std::vector<violation> out;
  auto add = [&out](std::string field, std::optional<std::size_t> idx, std::string msg) {
    out.push_back({std::move(field), idx, std::move(msg)});
  };

  if (g.a_count < 0) add("a", std::nullopt, "a_count must be nonnegative");
  if (g.dim == dim_kind::path) {
    if (g.b_count < 0) add("b", std::nullopt, "b_count must be nonnegative");
  } else {
    if (g.beta1 < 1 || g.beta2 < 1)
      add("b", std::nullopt, "grid dimensions must be positive");
  }

  if (g.s < rat(0)) add("s", std::nullopt, "separation parameter must be nonnegative");
  bool s_must_be_int =
      g.dim == dim_kind::path || g.met.kind == metric_kind::l1;
  if (g.s >= rat(0) && s_must_be_int && !is_integral(g.s))
    add("s", std::nullopt, "separation parameter must be an integer for this variant");

  if (g.group_size < 1) add("g", std::nullopt, "group size must be positive");
  int extensions = (g.group_size > 1 ? 1 : 0) + (g.bilateral ? 1 : 0) +
                   (g.dim == dim_kind::grid ? 1 : 0);
  if (extensions > 1)
    add("variant", std::nullopt,
        "group size > 1, bilateral, and grid are mutually exclusive");

  if (g.dim == dim_kind::grid && g.met.kind == metric_kind::wlinf &&
      (g.met.wx <= rat(0) || g.met.wy <= rat(0)))
    add("metric", std::nullopt, "wlinf weights must be positive");

  std::set<edge> seen;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const edge& e = g.edges[i];
    if (e.a < 1 || e.a > g.a_count)
      add("edges", i, "A-index out of range");
    if (g.dim == dim_kind::path) {
      if (e.b.y != 0) add("edges", i, "path position must be a scalar");
      if (e.b.x < 1 || e.b.x > g.b_count)
        add("edges", i, "position out of range");
      else if (g.group_size > 1 && e.b.x + g.group_size - 1 > g.b_count)
        add("edges", i, "group block does not fit before the end of the path");
    } else {
      if (e.b.x < 1 || e.b.x > g.beta1 || e.b.y < 1 || e.b.y > g.beta2)
        add("edges", i, "grid position out of range");
    }
    if (!seen.insert(e).second) add("edges", i, "duplicate edge");
  }

  if (g.weighted()) {
    if (g.weights->size() != g.edges.size())
      add("weights", std::nullopt, "weight list length differs from edge list");
    else
      for (std::size_t i = 0; i < g.weights->size(); ++i)
        if ((*g.weights)[i] <= rat(0)) add("weights", i, "weights must be positive");
  }
  return out;
}

// Mutual-exclusion test for two matched pairs; also the conflict-graph
// adjacency rule. Covers all variants:
//   path:      same A-vertex, or |b' - b''| <= s (g = 1), or overlapping
//              g+s windows (g > 1)
//   bilateral: |a' - a''| <= s or |b' - b''| <= s
//   grid:      same A-vertex, or metric distance <= s
inline bool pairs_conflict(const instance& g, const edge& e1, const edge& e2) {
  if (g.dim == dim_kind::grid) {
    if (e1.a == e2.a) return true;
    return within(g.met, to_rpoint(e1.b), to_rpoint(e2.b), g.s);
  }
  long long s = s_int(g);
  if (g.bilateral)
    return std::llabs(static_cast<long long>(e1.a) - e2.a) <= s ||
           std::llabs(static_cast<long long>(e1.b.x) - e2.b.x) <= s;
  if (e1.a == e2.a) return true;
  long long b1 = e1.b.x, b2 = e2.b.x;
  long long reach = g.group_size + s - 1;
  return (b2 <= b1 && b1 <= b2 + reach) || (b1 <= b2 && b2 <= b1 + reach);
}

// All problems with m on g: "structure" violations (not a matching / not an
// edge) and "separation" violations. Never throws.
inline std::vector<violation> matching_violations(const instance& g, const matching& m) {
  std::vector<violation> out;
  std::set<edge> edge_set(g.edges.begin(), g.edges.end());
  std::set<int> seen_a;
  std::set<position> seen_b;
  for (std::size_t i = 0; i < m.pairs.size(); ++i) {
    const edge& e = m.pairs[i];
    if (!edge_set.count(e))
      out.push_back({"structure", i, "pair is not an edge of the instance"});
    if (!seen_a.insert(e.a).second)
      out.push_back({"structure", i, "A-vertex matched twice"});
    if (!seen_b.insert(e.b).second)
      out.push_back({"structure", i, "position matched twice"});
  }
  for (std::size_t i = 0; i < m.pairs.size(); ++i)
    for (std::size_t j = i + 1; j < m.pairs.size(); ++j)
      if (m.pairs[i].a != m.pairs[j].a && m.pairs[i].b != m.pairs[j].b &&
          pairs_conflict(g, m.pairs[i], m.pairs[j]))
        out.push_back({"separation", j,
                       "pairs " + std::to_string(i) + " and " + std::to_string(j) +
                           " violate the separation constraint"});
  return out;
}

// True iff m satisfies the separation constraint. Structural violations
// (duplicate vertex, non-edge pair) throw invalid_matching_error.
inline bool is_feasible(const instance& g, const matching& m) {
  auto v = matching_violations(g, m);
  for (const auto& viol : v)
    if (viol.field == "structure") throw invalid_matching_error(viol.message);
  return v.empty();
}

// Cardinality when unweighted, total edge weight otherwise.
inline rat matching_value(const instance& g, const matching& m) {
  if (!g.weighted()) return rat(static_cast<long long>(m.pairs.size()));
  std::map<edge, rat> w;
  for (std::size_t i = 0; i < g.edges.size(); ++i) w[g.edges[i]] = g.weight(i);
  rat total{0};
  for (const auto& e : m.pairs) {
    auto it = w.find(e);
    if (it == w.end()) throw invalid_matching_error("pair is not an edge of the instance");
    total += it->second;
  }
  return total;
}

struct solve_report {
  matching result;
  rat value{0};
  std::string algorithm;
  std::optional<int> claw_bound;
  std::optional<std::string> guarantee;
  double elapsed_ms = 0;
};

namespace detail {

inline int position_index(const instance& g, const position& p) {
  if (g.dim == dim_kind::path) return p.x - 1;
  return (p.x - 1) * g.beta2 + (p.y - 1);
}

inline position position_at(const instance& g, int idx) {
  if (g.dim == dim_kind::path) return {idx + 1, 0};
  return {idx / g.beta2 + 1, idx % g.beta2 + 1};
}

}  // namespace detail

// Maximum-cardinality matching without separation (s = 0), by augmenting
// paths. Deterministic: A-vertices are processed in increasing order and
// adjacency follows the edge list.
inline matching classical_max_matching(const instance& g) {
  if (g.s != rat(0) || g.group_size != 1 || g.bilateral)
    throw wrong_solver_error(
        "classical matching requires s = 0, unit groups, one-sided constraints");
  int positions =
      g.dim == dim_kind::path ? g.b_count : g.beta1 * g.beta2;
  std::vector<std::vector<int>> adj(g.a_count + 1);
  for (const auto& e : g.edges) adj[e.a].push_back(detail::position_index(g, e.b));

  std::vector<int> match_b(positions, 0);  // position -> A-vertex (0 = free)
  std::vector<int> visited(g.a_count + 1, 0);
  int stamp = 0;

  std::function<bool(int)> augment = [&](int a) -> bool {
    visited[a] = stamp;
    for (int p : adj[a]) {
      if (match_b[p] == 0) {
        match_b[p] = a;
        return true;
      }
    }
    for (int p : adj[a]) {
      if (visited[match_b[p]] != stamp && augment(match_b[p])) {
        match_b[p] = a;
        return true;
      }
    }
    return false;
  };

  for (int a = 1; a <= g.a_count; ++a) {
    ++stamp;
    augment(a);
  }

  matching m;
  for (int p = 0; p < positions; ++p)
    if (match_b[p] != 0) m.pairs.push_back({match_b[p], detail::position_at(g, p)});
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

}  // namespace sepmatch
