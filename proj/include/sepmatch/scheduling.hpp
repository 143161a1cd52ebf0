#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "sepmatch/errors.hpp"

namespace sepmatch {

// Equal-length jobs with integer release times and deadlines. A job occupies
// [start, start + p) with release <= start and start + p <= deadline.
struct job {
  int id = 0;
  long long release = 0;
  long long deadline = 0;
  friend bool operator==(const job&, const job&) = default;
};

struct job_set {
  long long p = 1;  // common length
  std::vector<job> jobs;
};

// Drops jobs that cannot be scheduled at all (deadline < release + p), per
// the job_set invariant.
inline job_set make_job_set(long long p, std::vector<job> jobs) {
  if (p < 1) throw std::invalid_argument("job length must be positive");
  job_set out{p, {}};
  for (const auto& j : jobs) {
    if (j.release < 0) throw std::invalid_argument("release times must be nonnegative");
    if (j.deadline >= j.release + p) out.jobs.push_back(j);
  }
  return out;
}

struct schedule {
  struct item {
    int id = 0;
    long long start = 0;
  };
  std::vector<item> items;
  int throughput() const { return static_cast<int>(items.size()); }
};

// Maximum-throughput schedule. Start times are restricted to the grid
// {r_i + j*p : 0 <= j <= n}, which loses nothing: any feasible schedule can
// be left-shifted onto this grid. On that grid we run a window dynamic
// program over jobs in earliest-deadline order: F(k, u, v) is the best
// throughput using jobs {i <= k : r_i > u - p} inside [u, v). Scheduling job
// k (the latest deadline considered) at time t splits [u, v) into [u, t)
// with the same release threshold and [t + p, v) for jobs released after t;
// an exchange argument shows some optimal schedule has this shape, and the
// release thresholds keep the two sides disjoint, so the recursion is exact.
inline schedule schedule_equal_length_jobs(const job_set& js) {
  const long long p = js.p;
  const int n = static_cast<int>(js.jobs.size());
  if (n == 0) return {};

  std::vector<job> jobs(js.jobs);
  std::sort(jobs.begin(), jobs.end(), [](const job& a, const job& b) {
    return std::tie(a.deadline, a.release, a.id) < std::tie(b.deadline, b.release, b.id);
  });

  long long horizon = 0;
  for (const auto& j : jobs) horizon = std::max(horizon, j.deadline);

  std::vector<long long> grid;
  for (const auto& j : jobs)
    for (long long k = 0; k <= n; ++k) {
      long long t = j.release + k * p;
      if (t + p <= horizon) grid.push_back(t);
    }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  // memo: (k, u, v) -> {throughput, chosen start or -1 for "skip job k"}
  std::map<std::tuple<int, long long, long long>, std::pair<int, long long>> memo;

  std::function<int(int, long long, long long)> best = [&](int k, long long u,
                                                           long long v) -> int {
    while (k > 0 && jobs[k - 1].release <= u - p) --k;  // outside the allowed set
    if (k == 0 || u + p > v) return 0;
    auto key = std::make_tuple(k, u, v);
    if (auto it = memo.find(key); it != memo.end()) return it->second.first;

    const job& J = jobs[k - 1];
    int value = best(k - 1, u, v);
    long long chosen = -1;
    long long lo = std::max(u, J.release);
    long long hi = std::min(v, J.deadline) - p;
    auto first = std::lower_bound(grid.begin(), grid.end(), lo);
    for (auto it = first; it != grid.end() && *it <= hi; ++it) {
      long long t = *it;
      int cand = best(k - 1, u, t) + 1 + best(k - 1, t + p, v);
      if (cand > value) {
        value = cand;
        chosen = t;
      }
    }
    memo[key] = {value, chosen};
    return value;
  };

  schedule out;
  std::function<void(int, long long, long long)> rebuild = [&](int k, long long u,
                                                               long long v) {
    while (k > 0 && jobs[k - 1].release <= u - p) --k;
    if (k == 0 || u + p > v) return;
    auto [value, chosen] = memo.at(std::make_tuple(k, u, v));
    (void)value;
    if (chosen < 0) {
      rebuild(k - 1, u, v);
      return;
    }
    out.items.push_back({jobs[k - 1].id, chosen});
    rebuild(k - 1, u, chosen);
    rebuild(k - 1, chosen + p, v);
  };

  best(n, 0, horizon);
  rebuild(n, 0, horizon);
  std::sort(out.items.begin(), out.items.end(),
            [](const schedule::item& a, const schedule::item& b) { return a.start < b.start; });
  return out;
}

}  // namespace sepmatch
