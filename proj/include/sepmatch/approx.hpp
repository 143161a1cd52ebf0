#pragma once

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sepmatch/conflict.hpp"
#include "sepmatch/core.hpp"
#include "sepmatch/reductions.hpp"

namespace sepmatch {

enum class greedy_order { input_order, min_degree, max_weight };

// Maximal independent set, scanning vertices in the requested order.
// Ties always break toward the lower vertex index, so the result is
// deterministic. In a d-claw-free graph any maximal independent set has at
// least OPT/(d-1) vertices; with max_weight order the same factor holds by
// weight.
inline std::vector<int> greedy_mis(const conflict_graph& h,
                                   greedy_order order = greedy_order::input_order,
                                   const std::vector<rat>* weights = nullptr) {
  std::vector<int> scan(h.n);
  std::iota(scan.begin(), scan.end(), 0);
  if (order == greedy_order::min_degree) {
    std::stable_sort(scan.begin(), scan.end(), [&h](int a, int b) {
      return h.adj[a].size() < h.adj[b].size();
    });
  } else if (order == greedy_order::max_weight && weights) {
    std::stable_sort(scan.begin(), scan.end(), [weights](int a, int b) {
      return (*weights)[a] > (*weights)[b];
    });
  }
  std::vector<char> blocked(h.n, 0);
  std::vector<int> out;
  for (int v : scan) {
    if (blocked[v]) continue;
    out.push_back(v);
    blocked[v] = 1;
    for (int u : h.adj[v]) blocked[u] = 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// t-swap local search: repeatedly replace the set of current vertices that
// conflict with some <= t outside vertices, whenever that strictly improves
// the size (or the exact rational weight). Candidate incoming sets are
// enumerated by increasing size, then lexicographically; the first improving
// swap is applied and the scan restarts, so the result is deterministic. The
// fixpoint is t-locally-maximal, which in a d-claw-free graph guarantees at
// least 2/d of the optimum for t >= 2 (unweighted).
inline std::vector<int> local_search_mis(const conflict_graph& h, int t,
                                         std::optional<std::vector<int>> seed = std::nullopt,
                                         const std::vector<rat>* weights = nullptr,
                                         int budget_cap = 2000) {
  if (t < 1) throw std::invalid_argument("swap size t must be at least 1");
  if (t > 4 && h.n > budget_cap)
    throw budget_error("local search with t = " + std::to_string(t) + " on " +
                       std::to_string(h.n) + " vertices exceeds the budget cap");
  auto w = [weights](int v) { return weights ? (*weights)[v] : rat(1); };

  std::vector<char> in_set(h.n, 0);
  std::vector<int> cur;
  if (seed) {
    cur = *seed;
    std::sort(cur.begin(), cur.end());
    cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur[i] < 0 || cur[i] >= h.n) throw std::invalid_argument("seed vertex out of range");
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (h.adjacent(cur[i], cur[j]))
          throw std::invalid_argument("seed set is not independent");
    }
  } else {
    cur = greedy_mis(h, weights ? greedy_order::max_weight : greedy_order::input_order,
                     weights);
  }
  for (int v : cur) in_set[v] = 1;

  std::vector<int> incoming;
  auto try_swap = [&](const std::vector<int>& add) -> bool {
    for (std::size_t i = 0; i < add.size(); ++i)
      for (std::size_t j = i + 1; j < add.size(); ++j)
        if (h.adjacent(add[i], add[j])) return false;
    rat gain{0};
    for (int v : add) gain += w(v);
    std::vector<int> removed;
    for (int u : cur) {
      bool hit = false;
      for (int v : add)
        if (h.adjacent(u, v)) {
          hit = true;
          break;
        }
      if (hit) {
        removed.push_back(u);
        gain -= w(u);
      }
    }
    if (gain <= rat(0)) return false;
    for (int u : removed) in_set[u] = 0;
    std::vector<int> next;
    for (int u : cur)
      if (in_set[u]) next.push_back(u);
    for (int v : add) {
      next.push_back(v);
      in_set[v] = 1;
    }
    std::sort(next.begin(), next.end());
    cur = std::move(next);
    return true;
  };

  std::vector<int> outside;
  bool improved = true;
  while (improved) {
    improved = false;
    outside.clear();
    for (int v = 0; v < h.n; ++v)
      if (!in_set[v]) outside.push_back(v);
    for (int size = 1; size <= t && !improved; ++size) {
      if (static_cast<int>(outside.size()) < size) break;
      std::vector<int> idx(size);
      std::iota(idx.begin(), idx.end(), 0);
      for (;;) {
        incoming.clear();
        for (int i : idx) incoming.push_back(outside[i]);
        if (try_swap(incoming)) {
          improved = true;
          break;
        }
        // next lexicographic combination
        int pos = size - 1;
        while (pos >= 0 && idx[pos] == static_cast<int>(outside.size()) - size + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int q = pos + 1; q < size; ++q) idx[q] = idx[q - 1] + 1;
      }
    }
  }
  return cur;
}

// Intersection graph of the subsets (adjacent iff they share an element).
// For size-k subsets this graph is (k+1)-claw-free.
inline conflict_graph intersection_graph(const set_packing_instance& sp,
                                         std::size_t dense_limit = 10000) {
  auto viol = validate_setpacking(sp);
  if (!viol.empty())
    throw structure_error("bad set packing instance: " + viol.front().message);
  int n = static_cast<int>(sp.subsets.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& a = sp.subsets[i];
      const auto& b = sp.subsets[j];
      bool inter = false;
      std::size_t x = 0, y = 0;
      while (x < a.size() && y < b.size()) {
        if (a[x] == b[y]) {
          inter = true;
          break;
        }
        (a[x] < b[y]) ? ++x : ++y;
      }
      if (inter) edges.push_back({i, j});
    }
  return conflict_graph::from_edges(n, edges, sp.k + 1, dense_limit);
}

// t-swap local search for set packing, run on the intersection graph.
// Returns 1-based subset indices of a pairwise-disjoint, t-locally-maximal
// collection.
inline std::vector<int> setpack_local_search(const set_packing_instance& sp, int t) {
  auto h = intersection_graph(sp);
  auto picked = local_search_mis(h, t);
  for (int& i : picked) ++i;
  return picked;
}

struct algo_spec {
  enum class kind { greedy, local_search, set_pack };
  kind algo = kind::local_search;
  int t = 2;

  static algo_spec greedy() { return {kind::greedy, 0}; }
  static algo_spec local_search(int t = 2) { return {kind::local_search, t}; }
  static algo_spec set_pack() { return {kind::set_pack, 2}; }
};

// Approximation front end: builds the conflict graph (or the s = 1
// set-packing reduction), runs the requested heuristic, and maps the result
// back to a feasible matching.
inline solve_report solve_approx(const instance& g, algo_spec spec) {
  auto t0 = std::chrono::steady_clock::now();
  auto viol = validate_instance(g);
  if (!viol.empty()) throw structure_error("invalid instance: " + viol.front().message);

  solve_report rep;
  if (spec.algo == algo_spec::kind::set_pack) {
    auto sp = setpack_from_s1(g);  // enforces path, s=1, g=1, unweighted
    auto picked = setpack_local_search(sp, 2);
    rep.result = collection_to_matching(g, picked);
    rep.algorithm = "setpack";
    rep.claw_bound = 4;
    rep.guarantee = "3-set-packing 2-swap local search";
  } else {
    auto h = build_conflict(g);
    std::vector<rat> w;
    const std::vector<rat>* wp = nullptr;
    if (g.weighted()) {
      w = *g.weights;
      wp = &w;
    }
    std::vector<int> set;
    if (spec.algo == algo_spec::kind::greedy) {
      set = greedy_mis(h, wp ? greedy_order::max_weight : greedy_order::input_order, wp);
      rep.algorithm = "greedy";
      rep.guarantee = "(d-1) greedy";
    } else {
      set = local_search_mis(h, spec.t, std::nullopt, wp);
      rep.algorithm = "local-search";
      rep.guarantee = "t-swap local search";
    }
    rep.result = independent_set_to_matching(h, g, set);
    rep.claw_bound = h.claw_bound;
  }
  rep.value = matching_value(g, rep.result);
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace sepmatch
