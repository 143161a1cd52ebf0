// Seats spectators on a small theater grid under a distancing rule and
// prints the resulting layout, comparing local search against the exact
// oracle. Demonstrates library-level use without the CLI.

#include <cstdio>
#include <vector>

#include "sepmatch/sepmatch.hpp"

using namespace sepmatch;

int main() {
  // 5x6 hall, 12 spectators, every seat acceptable to everyone,
  // Euclidean distancing with s = 2 (squared comparisons, no rounding)
  instance hall;
  hall.dim = dim_kind::grid;
  hall.a_count = 12;
  hall.beta1 = 5;
  hall.beta2 = 6;
  hall.s = rat(2);
  hall.met.kind = metric_kind::l2;
  for (int a = 1; a <= hall.a_count; ++a)
    for (int x = 1; x <= hall.beta1; ++x)
      for (int y = 1; y <= hall.beta2; ++y) hall.edges.push_back({a, {x, y}});

  auto approx = solve_approx(hall, algo_spec::local_search(2));
  auto exact = brute_force(hall, 500);

  std::printf("local search seated %s of %d (claw bound %d, guarantee %s)\n",
              to_string(approx.value).c_str(), hall.a_count, *approx.claw_bound,
              approx.guarantee->c_str());
  std::printf("exact optimum: %s\n\n", to_string(exact.value).c_str());

  std::vector<std::vector<char>> grid(hall.beta1 + 1,
                                      std::vector<char>(hall.beta2 + 1, '.'));
  for (const auto& pr : exact.result.pairs) grid[pr.b.x][pr.b.y] = '#';
  for (int x = 1; x <= hall.beta1; ++x) {
    for (int y = 1; y <= hall.beta2; ++y) std::putchar(grid[x][y]);
    std::putchar('\n');
  }

  // tighten the rule to "more than two seats apart in l1" and re-solve
  hall.met.kind = metric_kind::l1;
  auto stricter = solve_approx(hall, algo_spec::local_search(2));
  std::printf("\nwith l1 distancing instead: %s seated\n",
              to_string(stricter.value).c_str());
  return 0;
}
