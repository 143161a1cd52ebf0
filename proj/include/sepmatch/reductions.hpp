#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sepmatch/core.hpp"
#include "sepmatch/scheduling.hpp"

namespace sepmatch {

// Universe [u] with size-k subsets. Subset and block indices are 1-based in
// every public operation, matching the S_1..S_M convention.
struct set_packing_instance {
  int universe_size = 0;
  int k = 3;
  std::vector<std::vector<int>> subsets;  // each sorted ascending

  // Max number of subsets any single element appears in.
  int degree() const {
    std::vector<int> count(universe_size + 1, 0);
    int d = 0;
    for (const auto& s : subsets)
      for (int e : s)
        if (e >= 1 && e <= universe_size) d = std::max(d, ++count[e]);
    return d;
  }
  friend bool operator==(const set_packing_instance&, const set_packing_instance&) = default;
};

inline std::vector<violation> validate_setpacking(const set_packing_instance& sp) {
  std::vector<violation> out;
  if (sp.universe_size < 1)
    out.push_back({"u", std::nullopt, "universe size must be positive"});
  if (sp.k < 1) out.push_back({"k", std::nullopt, "subset size must be positive"});
  for (std::size_t i = 0; i < sp.subsets.size(); ++i) {
    const auto& s = sp.subsets[i];
    if (static_cast<int>(s.size()) != sp.k)
      out.push_back({"sets", i, "subset does not have exactly k elements"});
    std::set<int> uniq(s.begin(), s.end());
    if (uniq.size() != s.size())
      out.push_back({"sets", i, "subset has repeated elements"});
    for (int e : s)
      if (e < 1 || e > sp.universe_size)
        out.push_back({"sets", i, "element out of range"});
  }
  return out;
}

inline set_packing_instance make_setpacking(int universe_size,
                                            std::vector<std::vector<int>> subsets,
                                            int k = 3) {
  set_packing_instance sp{universe_size, k, std::move(subsets)};
  for (auto& s : sp.subsets) std::sort(s.begin(), s.end());
  auto v = validate_setpacking(sp);
  if (!v.empty()) throw structure_error("bad set packing instance: " + v.front().message);
  return sp;
}

namespace detail {

inline long long block_base(long long s, long long i) { return 3 * (s + 1) * (i - 1); }

}  // namespace detail

// Hardness gadget: a 3-set-packing instance becomes a path instance with one
// block of 3(s+1) positions per subset. Element vertices v_1..v_u connect to
// the three "solid" positions base+1, base+s+2, base+2s+3 of every block
// whose subset contains them; 2(M - u/3) filler vertices w_j connect to the
// two "dashed" positions base+2, base+s+3 of every block. The gadget admits
// a matching covering all of A iff the packing instance has u/3 disjoint
// subsets.
inline instance gadget_from_3sp(const set_packing_instance& sp, long long s) {
  if (s < 1) throw gadget_error("gadget needs separation s >= 1");
  auto v = validate_setpacking(sp);
  if (!v.empty()) throw gadget_error("bad set packing instance: " + v.front().message);
  if (sp.k != 3) throw gadget_error("gadget is defined for 3-set packing only");
  const int u = sp.universe_size;
  const int M = static_cast<int>(sp.subsets.size());
  if (u % 3 != 0) throw gadget_error("universe size must be a multiple of 3");
  if (M < u / 3) throw gadget_error("fewer than u/3 subsets: trivially a NO instance");

  const int w_count = 2 * (M - u / 3);
  instance g;
  g.dim = dim_kind::path;
  g.a_count = u + w_count;
  g.b_count = static_cast<int>(3 * (s + 1) * M);
  g.s = rat(s);
  for (int i = 1; i <= M; ++i) {
    long long base = detail::block_base(s, i);
    for (int e : sp.subsets[i - 1])
      for (long long off : {1ll, s + 2, 2 * s + 3})
        g.edges.push_back({e, {static_cast<int>(base + off), 0}});
    for (int j = 1; j <= w_count; ++j) {
      g.edges.push_back({u + j, {static_cast<int>(base + 2), 0}});
      g.edges.push_back({u + j, {static_cast<int>(base + s + 3), 0}});
    }
  }
  return g;
}

// Completeness direction: a perfect packing (1-based subset indices, u/3
// disjoint subsets covering the universe) induces a feasible matching of
// size a_count on the gadget.
inline matching packing_to_matching(const set_packing_instance& sp, long long s,
                                    const std::vector<int>& packing) {
  const int u = sp.universe_size;
  const int M = static_cast<int>(sp.subsets.size());
  std::set<int> chosen(packing.begin(), packing.end());
  if (chosen.size() != packing.size()) throw mapping_error("repeated subset index");
  for (int i : chosen)
    if (i < 1 || i > M) throw mapping_error("subset index out of range");
  std::set<int> covered;
  for (int i : chosen)
    for (int e : sp.subsets[i - 1])
      if (!covered.insert(e).second)
        throw mapping_error("chosen subsets are not disjoint");
  if (static_cast<int>(covered.size()) != u || static_cast<int>(chosen.size()) != u / 3)
    throw mapping_error("chosen subsets do not cover the universe");

  matching m;
  int next_w = 0;
  for (int i = 1; i <= M; ++i) {
    long long base = detail::block_base(s, i);
    if (chosen.count(i)) {
      const auto& elems = sp.subsets[i - 1];  // sorted
      const long long offs[3] = {1, s + 2, 2 * s + 3};
      for (int t = 0; t < 3; ++t)
        m.pairs.push_back({elems[t], {static_cast<int>(base + offs[t]), 0}});
    } else {
      m.pairs.push_back({u + ++next_w, {static_cast<int>(base + 2), 0}});
      m.pairs.push_back({u + ++next_w, {static_cast<int>(base + s + 3), 0}});
    }
  }
  return m;
}

// Soundness direction: the blocks with exactly three matched positions.
// Separation forces those three to be the solid positions, so the returned
// subsets are pairwise disjoint, and |result| >= |matching| - 2M.
inline std::vector<int> matching_to_packing(const set_packing_instance& sp, long long s,
                                            const matching& m) {
  instance g = gadget_from_3sp(sp, s);
  try {
    if (!is_feasible(g, m)) throw mapping_error("matching is infeasible on the gadget");
  } catch (const invalid_matching_error& e) {
    throw mapping_error(std::string("invalid matching on the gadget: ") + e.what());
  }
  const int M = static_cast<int>(sp.subsets.size());
  std::vector<int> per_block(M + 1, 0);
  for (const auto& pr : m.pairs) {
    int block = static_cast<int>((pr.b.x - 1) / (3 * (s + 1))) + 1;
    ++per_block[block];
  }
  std::vector<int> out;
  std::set<int> covered;
  for (int i = 1; i <= M; ++i) {
    if (per_block[i] != 3) continue;
    out.push_back(i);
    for (int e : sp.subsets[i - 1])
      if (!covered.insert(e).second)
        throw mapping_error("full blocks map to intersecting subsets");
  }
  return out;
}

// s = 1 approximation route: universe A + {0..b}, one 3-subset
// {a', b'-1, b'} per edge. Subset i (1-based) corresponds to edge i-1, and
// disjoint collections correspond to feasible matchings.
inline set_packing_instance setpack_from_s1(const instance& g) {
  if (g.dim != dim_kind::path || g.s != rat(1) || g.group_size != 1 || g.bilateral ||
      g.weighted())
    throw wrong_solver_error(
        "set-packing reduction needs an unweighted path instance with s = 1");
  auto viol = validate_instance(g);
  if (!viol.empty()) throw structure_error("invalid instance: " + viol.front().message);
  set_packing_instance sp;
  sp.universe_size = g.a_count + g.b_count + 1;
  sp.k = 3;
  auto slot = [&](int b) { return g.a_count + b + 1; };  // b in {0..b_count}
  for (const auto& e : g.edges) {
    std::vector<int> s{e.a, slot(e.b.x - 1), slot(e.b.x)};
    std::sort(s.begin(), s.end());
    sp.subsets.push_back(std::move(s));
  }
  return sp;
}

inline matching collection_to_matching(const instance& g, const std::vector<int>& subsets) {
  matching m;
  for (int i : subsets) {
    if (i < 1 || i > static_cast<int>(g.edges.size()))
      throw mapping_error("subset index out of range");
    m.pairs.push_back(g.edges[i - 1]);
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

inline std::vector<int> matching_to_collection(const instance& g, const matching& m) {
  std::map<edge, int> index;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    index[g.edges[i]] = static_cast<int>(i) + 1;
  std::vector<int> out;
  for (const auto& e : m.pairs) {
    auto it = index.find(e);
    if (it == index.end()) throw mapping_error("matching pair is not an instance edge");
    out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The neighborhood of each A-vertex as a closed interval [x, y] of
// positions, or nullopt when empty. Throws if some neighborhood is not
// contiguous.
inline std::vector<std::optional<std::pair<int, int>>> neighborhood_intervals(
    const instance& g) {
  if (g.dim != dim_kind::path)
    throw wrong_solver_error("interval structure applies to path instances");
  std::vector<std::vector<int>> nb(g.a_count + 1);
  for (const auto& e : g.edges) nb[e.a].push_back(e.b.x);
  std::vector<std::optional<std::pair<int, int>>> out(g.a_count + 1);
  for (int a = 1; a <= g.a_count; ++a) {
    auto& v = nb[a];
    if (v.empty()) continue;
    std::sort(v.begin(), v.end());
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] != v[i - 1] + 1)
        throw structure_error("neighborhood of A-vertex " + std::to_string(a) +
                              " is not an interval");
    out[a] = {v.front(), v.back()};
  }
  return out;
}

// Interval instance -> equal-length jobs: p = s + 1, release x, deadline
// y + p. A-vertices with empty neighborhoods contribute no job.
inline job_set jobs_from_interval(const instance& g) {
  if (g.dim != dim_kind::path || g.group_size != 1 || g.bilateral)
    throw wrong_solver_error("job reduction needs a plain path instance");
  auto viol = validate_instance(g);
  if (!viol.empty()) throw structure_error("invalid instance: " + viol.front().message);
  long long p = s_int(g) + 1;
  auto intervals = neighborhood_intervals(g);
  job_set js{p, {}};
  for (int a = 1; a <= g.a_count; ++a)
    if (intervals[a])
      js.jobs.push_back({a, intervals[a]->first, intervals[a]->second + p});
  return js;
}

}  // namespace sepmatch
