#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sepmatch/core.hpp"

namespace sepmatch {

// Conflict graph H over the edges of an instance: vertex i is the i-th edge,
// and adjacency encodes mutual exclusion, so independent sets of H are
// exactly the feasible matchings. Adjacency is stored densely (bit matrix)
// up to dense_limit vertices and as sorted lists above; behavior is
// identical either way.
struct conflict_graph {
  int n = 0;
  int claw_bound = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists
  bool dense = false;
  std::size_t row_words = 0;
  std::vector<std::uint64_t> bits;

  bool adjacent(int i, int j) const {
    if (i == j) return false;
    if (dense)
      return (bits[static_cast<std::size_t>(i) * row_words + j / 64] >>
              (j % 64)) & 1u;
    return std::binary_search(adj[i].begin(), adj[i].end(), j);
  }

  std::size_t edge_count() const {
    std::size_t m = 0;
    for (const auto& r : adj) m += r.size();
    return m / 2;
  }

  // Builds a graph directly from an edge list; used by tests and by the
  // set-packing intersection graph.
  static conflict_graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                   int claw_bound = 0, std::size_t dense_limit = 10000) {
    conflict_graph h;
    h.n = n;
    h.claw_bound = claw_bound;
    h.adj.assign(n, {});
    h.dense = static_cast<std::size_t>(n) <= dense_limit;
    if (h.dense) {
      h.row_words = (n + 63) / 64;
      h.bits.assign(static_cast<std::size_t>(n) * h.row_words, 0);
    }
    auto set_bit = [&h](int i, int j) {
      h.bits[static_cast<std::size_t>(i) * h.row_words + j / 64] |= 1ull << (j % 64);
    };
    for (auto [i, j] : edges) {
      if (i == j) continue;
      h.adj[i].push_back(j);
      h.adj[j].push_back(i);
      if (h.dense) {
        set_bit(i, j);
        set_bit(j, i);
      }
    }
    for (auto& r : h.adj) {
      std::sort(r.begin(), r.end());
      r.erase(std::unique(r.begin(), r.end()), r.end());
    }
    return h;
  }
};

// Claw-freeness bound per variant: 4 for path instances (any group size),
// 5 for bilateral separation, covering_bound(metric) + 2 on the grid.
inline int claw_bound_for(const instance& g) {
  if (g.dim == dim_kind::grid) return covering_bound(g.met) + 2;
  return g.bilateral ? 5 : 4;
}

inline conflict_graph build_conflict(const instance& g, std::size_t dense_limit = 10000) {
  auto viol = validate_instance(g);
  if (!viol.empty())
    throw structure_error("invalid instance: " + viol.front().message);
  int n = static_cast<int>(g.edges.size());
  std::vector<std::pair<int, int>> conflicts;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pairs_conflict(g, g.edges[i], g.edges[j])) conflicts.push_back({i, j});
  return conflict_graph::from_edges(n, conflicts, claw_bound_for(g), dense_limit);
}

struct claw {
  int center = 0;
  std::vector<int> talons;
};

// Exhaustive search for an induced d-claw: a center adjacent to d pairwise
// non-adjacent talons. Meant for test-scale graphs; refuses to run above
// size_cap vertices.
inline std::optional<claw> find_claw(const conflict_graph& h, int d, int size_cap = 200) {
  if (d < 1) throw std::invalid_argument("claw size must be at least 1");
  if (h.n > size_cap)
    throw size_cap_error("graph with " + std::to_string(h.n) +
                         " vertices exceeds the claw-search cap " +
                         std::to_string(size_cap));
  std::vector<int> picked;
  std::function<bool(const std::vector<int>&, std::size_t)> extend =
      [&](const std::vector<int>& cand, std::size_t start) -> bool {
    if (static_cast<int>(picked.size()) == d) return true;
    for (std::size_t i = start; i < cand.size(); ++i) {
      if (cand.size() - i < d - picked.size()) return false;
      int v = cand[i];
      bool ok = true;
      for (int u : picked)
        if (h.adjacent(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      picked.push_back(v);
      if (extend(cand, i + 1)) return true;
      picked.pop_back();
    }
    return false;
  };
  for (int c = 0; c < h.n; ++c) {
    if (static_cast<int>(h.adj[c].size()) < d) continue;
    picked.clear();
    if (extend(h.adj[c], 0)) return claw{c, picked};
  }
  return std::nullopt;
}

inline matching independent_set_to_matching(const conflict_graph& h, const instance& g,
                                            const std::vector<int>& set) {
  for (int v : set)
    if (v < 0 || v >= h.n)
      throw correspondence_error("vertex index out of range");
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set[i] == set[j]) throw correspondence_error("repeated vertex in set");
      if (h.adjacent(set[i], set[j]))
        throw correspondence_error("set is not independent");
    }
  matching m;
  for (int v : set) m.pairs.push_back(g.edges[v]);
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

inline std::vector<int> matching_to_independent_set(const conflict_graph& h,
                                                    const instance& g, const matching& m) {
  try {
    if (!is_feasible(g, m))
      throw correspondence_error("matching violates the separation constraint");
  } catch (const invalid_matching_error& e) {
    throw correspondence_error(std::string("invalid matching: ") + e.what());
  }
  std::map<edge, int> index;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    index[g.edges[i]] = static_cast<int>(i);
  std::vector<int> out;
  for (const auto& e : m.pairs) {
    auto it = index.find(e);
    if (it == index.end())
      throw correspondence_error("matching pair is not an instance edge");
    out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (h.adjacent(out[i], out[j]))
        throw correspondence_error("graph does not match the instance");
  return out;
}

// Text dump: header "p claw <d> <|V|> <|E|>", then one "i j" line per edge,
// 0-based, i < j.
inline std::string dump_conflict(const conflict_graph& h) {
  std::ostringstream os;
  os << "p claw " << h.claw_bound << ' ' << h.n << ' ' << h.edge_count() << '\n';
  for (int i = 0; i < h.n; ++i)
    for (int j : h.adj[i])
      if (i < j) os << i << ' ' << j << '\n';
  return os.str();
}

}  // namespace sepmatch
