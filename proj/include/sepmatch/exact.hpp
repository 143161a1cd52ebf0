#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "sepmatch/approx.hpp"
#include "sepmatch/conflict.hpp"
#include "sepmatch/core.hpp"
#include "sepmatch/reductions.hpp"
#include "sepmatch/scheduling.hpp"

namespace sepmatch {

inline constexpr int default_oracle_cap = 40;

namespace detail {

// Branch and bound for maximum-weight independent set on bitset rows.
// Branches on the first candidate (vertices are pre-sorted by degree), and
// prunes with a greedy clique-cover bound: candidates are covered by cliques
// and each clique contributes at most its heaviest vertex. Weights are
// pre-scaled integers, so the search is exact.
struct mwis_engine {
  int n = 0;
  int words = 0;
  std::vector<std::uint64_t> nb;       // open neighborhood rows
  std::vector<long long> weight;
  std::vector<std::uint64_t> cand_buf; // one slice per recursion level
  std::vector<std::uint64_t> rest_buf;
  std::vector<std::uint64_t> clique_buf;
  std::vector<int> chosen;
  std::vector<int> best_set;
  long long best = 0;
  long long cur = 0;

  static void clear_bit(std::uint64_t* m, int v) { m[v / 64] &= ~(1ull << (v % 64)); }

  int first_bit(const std::uint64_t* m) const {
    for (int w = 0; w < words; ++w)
      if (m[w]) return w * 64 + std::countr_zero(m[w]);
    return -1;
  }

  long long clique_cover_bound(const std::uint64_t* cand, int level) {
    std::uint64_t* rest = &rest_buf[static_cast<std::size_t>(level) * words];
    std::uint64_t* cl = &clique_buf[static_cast<std::size_t>(level) * words];
    for (int w = 0; w < words; ++w) rest[w] = cand[w];
    long long ub = 0;
    for (;;) {
      int v = first_bit(rest);
      if (v < 0) break;
      clear_bit(rest, v);
      long long heaviest = weight[v];
      const std::uint64_t* row_v = &nb[static_cast<std::size_t>(v) * words];
      for (int w = 0; w < words; ++w) cl[w] = rest[w] & row_v[w];
      for (;;) {
        int u = first_bit(cl);
        if (u < 0) break;
        heaviest = std::max(heaviest, weight[u]);
        clear_bit(rest, u);
        const std::uint64_t* row_u = &nb[static_cast<std::size_t>(u) * words];
        for (int w = 0; w < words; ++w) cl[w] &= row_u[w];
      }
      ub += heaviest;
    }
    return ub;
  }

  void dfs(int level) {
    const std::uint64_t* cand = &cand_buf[static_cast<std::size_t>(level) * words];
    if (cur > best) {
      best = cur;
      best_set = chosen;
    }
    if (cur + clique_cover_bound(cand, level) <= best) return;
    int v = first_bit(cand);
    std::uint64_t* child = &cand_buf[static_cast<std::size_t>(level + 1) * words];
    const std::uint64_t* row_v = &nb[static_cast<std::size_t>(v) * words];

    for (int w = 0; w < words; ++w) child[w] = cand[w] & ~row_v[w];
    clear_bit(child, v);
    chosen.push_back(v);
    cur += weight[v];
    dfs(level + 1);
    chosen.pop_back();
    cur -= weight[v];

    for (int w = 0; w < words; ++w) child[w] = cand[w];
    clear_bit(child, v);
    dfs(level + 1);
  }

  // seed: initial incumbent (vertex list); returns the best vertex list.
  std::vector<int> solve(const conflict_graph& h, const std::vector<long long>& ws,
                         const std::vector<int>& seed, long long seed_value) {
    n = h.n;
    if (n == 0) return {};
    words = (n + 63) / 64;
    nb.assign(static_cast<std::size_t>(n) * words, 0);
    for (int v = 0; v < n; ++v)
      for (int u : h.adj[v]) nb[static_cast<std::size_t>(v) * words + u / 64] |= 1ull << (u % 64);
    weight = ws;
    cand_buf.assign(static_cast<std::size_t>(n + 1) * words, 0);
    rest_buf.assign(static_cast<std::size_t>(n + 1) * words, 0);
    clique_buf.assign(static_cast<std::size_t>(n + 1) * words, 0);
    for (int v = 0; v < n; ++v) cand_buf[v / 64] |= 1ull << (v % 64);
    best_set = seed;
    best = seed_value;
    chosen.clear();
    cur = 0;
    dfs(0);
    return best_set;
  }
};

}  // namespace detail

// Exact maximum (weight) matching with separation, by branch and bound over
// independent sets of the conflict graph. Vertices are ordered by degree so
// branching always splits on the most conflicted edge; a greedy solution
// seeds the incumbent. Exhaustive up to sound pruning, hence exact. Refuses
// instances with more than cap edges.
inline solve_report brute_force(const instance& g, int cap = default_oracle_cap) {
  auto t0 = std::chrono::steady_clock::now();
  if (static_cast<int>(g.edges.size()) > cap)
    throw size_cap_error("instance has " + std::to_string(g.edges.size()) +
                         " edges, above the oracle cap " + std::to_string(cap));
  auto viol = validate_instance(g);
  if (!viol.empty()) throw structure_error("invalid instance: " + viol.front().message);

  auto h = build_conflict(g);
  const int n = h.n;
  std::vector<rat> w(n, rat(1));
  if (g.weighted())
    for (int i = 0; i < n; ++i) w[i] = g.weight(i);

  // scale the rational weights to exact integers
  long long denom_lcm = 1;
  for (const auto& r : w) {
    long long d = r.denominator();
    long long gcd = std::gcd(denom_lcm, d);
    denom_lcm = denom_lcm / gcd * d;
    if (denom_lcm > (1ll << 40))
      throw structure_error("weights too fine-grained for the exact solver");
  }
  std::vector<long long> scaled(n);
  for (int i = 0; i < n; ++i)
    scaled[i] = w[i].numerator() * (denom_lcm / w[i].denominator());

  // relabel by decreasing degree so the engine branches high-degree first
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&h](int a, int b) {
    return h.adj[a].size() > h.adj[b].size();
  });
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  std::vector<std::pair<int, int>> relabeled_edges;
  for (int v = 0; v < n; ++v)
    for (int u : h.adj[v])
      if (v < u) relabeled_edges.push_back({rank[v], rank[u]});
  auto hr = conflict_graph::from_edges(n, relabeled_edges, h.claw_bound);
  std::vector<long long> ws(n);
  for (int i = 0; i < n; ++i) ws[i] = scaled[order[i]];

  std::vector<int> seed = greedy_mis(h, greedy_order::max_weight, &w);
  long long seed_value = 0;
  std::vector<int> seed_relabeled;
  for (int v : seed) {
    seed_value += scaled[v];
    seed_relabeled.push_back(rank[v]);
  }

  detail::mwis_engine engine;
  std::vector<int> best_relabeled = engine.solve(hr, ws, seed_relabeled, seed_value);
  std::vector<int> best;
  for (int v : best_relabeled) best.push_back(order[v]);
  std::sort(best.begin(), best.end());

  solve_report rep;
  rep.result = independent_set_to_matching(h, g, best);
  rep.value = matching_value(g, rep.result);
  rep.algorithm = "brute-force";
  rep.claw_bound = h.claw_bound;
  rep.guarantee = "exact";
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// Exact polynomial solver for path instances whose A-neighborhoods are
// intervals: reduce to equal-length job scheduling (p = s + 1) and read the
// matched position off each scheduled start time.
inline solve_report interval_exact(const instance& g) {
  auto t0 = std::chrono::steady_clock::now();
  if (g.dim != dim_kind::path || g.group_size != 1 || g.bilateral || g.weighted())
    throw wrong_solver_error(
        "interval solver needs an unweighted, one-sided path instance");
  auto viol = validate_instance(g);
  if (!viol.empty()) throw structure_error("invalid instance: " + viol.front().message);

  job_set js = jobs_from_interval(g);  // throws structure_error if not interval
  schedule sch = schedule_equal_length_jobs(js);

  solve_report rep;
  for (const auto& item : sch.items)
    rep.result.pairs.push_back({item.id, {static_cast<int>(item.start), 0}});
  std::sort(rep.result.pairs.begin(), rep.result.pairs.end());
  rep.value = matching_value(g, rep.result);
  rep.algorithm = "interval-exact";
  rep.claw_bound = claw_bound_for(g);
  rep.guarantee = "exact";
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace sepmatch
