#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "sepmatch/core.hpp"
#include "sepmatch/reductions.hpp"

namespace sepmatch {

// Seeded generators for test corpora and the CLI. Identical seeds give
// identical instances.
struct gen_rng {
  std::mt19937_64 eng;
  explicit gen_rng(std::uint64_t seed) : eng(seed) {}

  int int_in(int lo, int hi) {  // inclusive
    return static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1)) + lo;
  }
  bool chance(double p) {
    return (eng() >> 11) < static_cast<std::uint64_t>(p * 9007199254740992.0);  // 2^53
  }
  rat small_rat() { return rat(int_in(1, 12), int_in(1, 4)); }
};

inline instance gen_random_path(int a, int b, long long s, double density,
                                std::uint64_t seed, int group_size = 1,
                                bool bilateral = false, bool weighted = false) {
  gen_rng rng(seed);
  instance g;
  g.dim = dim_kind::path;
  g.a_count = a;
  g.b_count = b;
  g.s = rat(s);
  g.group_size = group_size;
  g.bilateral = bilateral;
  int last_start = b - group_size + 1;
  for (int av = 1; av <= a; ++av)
    for (int bv = 1; bv <= last_start; ++bv)
      if (rng.chance(density)) g.edges.push_back({av, {bv, 0}});
  if (weighted) {
    std::vector<rat> w;
    for (std::size_t i = 0; i < g.edges.size(); ++i) w.push_back(rng.small_rat());
    g.weights = std::move(w);
  }
  return g;
}

// Every A-vertex gets a contiguous (possibly empty) interval of positions.
inline instance gen_interval_instance(int a, int b, long long s, int len_min, int len_max,
                                      std::uint64_t seed) {
  gen_rng rng(seed);
  instance g;
  g.dim = dim_kind::path;
  g.a_count = a;
  g.b_count = b;
  g.s = rat(s);
  for (int av = 1; av <= a; ++av) {
    int len = std::min(rng.int_in(len_min, len_max), b);
    if (len <= 0) continue;
    int x = rng.int_in(1, b - len + 1);
    for (int bv = x; bv < x + len; ++bv) g.edges.push_back({av, {bv, 0}});
  }
  return g;
}

inline instance gen_grid_instance(int a, int beta1, int beta2, const rat& s,
                                  const metric& met, double density, std::uint64_t seed,
                                  bool weighted = false) {
  gen_rng rng(seed);
  instance g;
  g.dim = dim_kind::grid;
  g.a_count = a;
  g.beta1 = beta1;
  g.beta2 = beta2;
  g.s = s;
  g.met = met;
  for (int av = 1; av <= a; ++av)
    for (int x = 1; x <= beta1; ++x)
      for (int y = 1; y <= beta2; ++y)
        if (rng.chance(density)) g.edges.push_back({av, {x, y}});
  if (weighted) {
    std::vector<rat> w;
    for (std::size_t i = 0; i < g.edges.size(); ++i) w.push_back(rng.small_rat());
    g.weights = std::move(w);
  }
  return g;
}

// Like gen_random_path but with an exact edge budget: a uniform sample of
// max_edges distinct (a, position) pairs. Handy when a corpus must stay
// under an oracle cap.
inline instance gen_capped_instance(dim_kind dim, int a, int b1, int b2, const rat& s,
                                    const metric& met, int group_size, bool bilateral,
                                    int max_edges, std::uint64_t seed,
                                    bool weighted = false) {
  gen_rng rng(seed);
  instance g;
  g.dim = dim;
  g.a_count = a;
  g.s = s;
  g.group_size = group_size;
  g.bilateral = bilateral;
  std::vector<position> slots;
  if (dim == dim_kind::path) {
    g.b_count = b1;
    for (int x = 1; x <= b1 - group_size + 1; ++x) slots.push_back({x, 0});
  } else {
    g.beta1 = b1;
    g.beta2 = b2;
    g.met = met;
    for (int x = 1; x <= b1; ++x)
      for (int y = 1; y <= b2; ++y) slots.push_back({x, y});
  }
  std::vector<edge> pool;
  for (int av = 1; av <= a; ++av)
    for (const auto& p : slots) pool.push_back({av, p});
  // Fisher-Yates prefix of size max_edges
  int take = std::min<int>(max_edges, static_cast<int>(pool.size()));
  for (int i = 0; i < take; ++i) {
    int j = i + rng.int_in(0, static_cast<int>(pool.size()) - 1 - i);
    std::swap(pool[i], pool[j]);
  }
  g.edges.assign(pool.begin(), pool.begin() + take);
  std::sort(g.edges.begin(), g.edges.end());
  if (weighted) {
    std::vector<rat> w;
    for (std::size_t i = 0; i < g.edges.size(); ++i) w.push_back(rng.small_rat());
    g.weights = std::move(w);
  }
  return g;
}

// Random 3-set-packing instance over [u] with M subsets and degree at most
// max_degree. With planted = true the first u/3 subsets form a perfect
// packing (random partition of the universe), so the derived gadget is a
// YES instance; the remaining subsets are random distractors.
inline set_packing_instance gen_3sp(int u, int M, bool planted, std::uint64_t seed,
                                    int max_degree = 6) {
  if (u < 3 || u % 3 != 0) throw structure_error("universe size must be a positive multiple of 3");
  if (M < (planted ? u / 3 : 1)) throw structure_error("too few subsets requested");
  gen_rng rng(seed);
  std::vector<int> degree(u + 1, 0);
  std::set<std::vector<int>> seen;
  set_packing_instance sp;
  sp.universe_size = u;
  sp.k = 3;

  auto push = [&](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    if (!seen.insert(s).second) return false;
    for (int e : s) ++degree[e];
    sp.subsets.push_back(std::move(s));
    return true;
  };

  if (planted) {
    std::vector<int> perm(u);
    for (int i = 0; i < u; ++i) perm[i] = i + 1;
    for (int i = u - 1; i > 0; --i) std::swap(perm[i], perm[rng.int_in(0, i)]);
    for (int i = 0; i < u; i += 3) push({perm[i], perm[i + 1], perm[i + 2]});
  }

  int attempts = 0;
  while (static_cast<int>(sp.subsets.size()) < M) {
    if (++attempts > 20000)
      throw structure_error("could not generate the requested number of subsets "
                            "under the degree cap");
    int e1 = rng.int_in(1, u), e2 = rng.int_in(1, u), e3 = rng.int_in(1, u);
    if (e1 == e2 || e1 == e3 || e2 == e3) continue;
    if (degree[e1] >= max_degree || degree[e2] >= max_degree || degree[e3] >= max_degree)
      continue;
    push({e1, e2, e3});
  }
  return sp;
}

// Random feasible matching: greedy over a shuffled edge order.
inline matching random_feasible_matching(const instance& g, std::uint64_t seed) {
  gen_rng rng(seed);
  std::vector<int> order(g.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
    std::swap(order[i], order[rng.int_in(0, i)]);
  matching m;
  std::set<int> used_a;
  std::set<position> used_b;
  for (int idx : order) {
    const edge& e = g.edges[idx];
    if (used_a.count(e.a) || used_b.count(e.b)) continue;
    bool ok = true;
    for (const auto& chosen : m.pairs)
      if (pairs_conflict(g, chosen, e)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    m.pairs.push_back(e);
    used_a.insert(e.a);
    used_b.insert(e.b);
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

}  // namespace sepmatch
