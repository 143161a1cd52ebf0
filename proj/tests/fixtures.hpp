#pragma once

// Shared fixtures: the worked 3-block gadget example and per-variant random
// corpora used across the unit and acceptance suites.

#include <cstdint>
#include <vector>

#include "sepmatch/core.hpp"
#include "sepmatch/generate.hpp"
#include "sepmatch/reductions.hpp"

namespace sepmatch::testing {

// u=6, M=3, S1={1,2,3}, S2={2,3,4}, S3={4,5,6}: with s=1 the gadget has 18
// positions, 8 A-vertices (v1..v6, w1=7, w2=8), and {S1, S3} is a perfect
// packing.
inline set_packing_instance example_setpacking() {
  return make_setpacking(6, {{1, 2, 3}, {2, 3, 4}, {4, 5, 6}});
}

inline instance example_gadget() { return gadget_from_3sp(example_setpacking(), 1); }

// The matching induced by the packing {S1, S3}: solid edges in blocks 1 and
// 3, dashed edges to w1, w2 in block 2.
inline matching example_gadget_matching() {
  matching m;
  m.pairs = {{1, {1, 0}},  {2, {3, 0}},  {3, {5, 0}},  {7, {8, 0}},
             {8, {10, 0}}, {4, {13, 0}}, {5, {15, 0}}, {6, {17, 0}}};
  return m;
}

enum class variant_kind {
  path,
  groups,
  bilateral,
  grid_l1,
  grid_linf,
  grid_wlinf,
  grid_l2
};

inline const std::vector<variant_kind>& all_variants() {
  static const std::vector<variant_kind> v{
      variant_kind::path,      variant_kind::groups,    variant_kind::bilateral,
      variant_kind::grid_l1,   variant_kind::grid_linf, variant_kind::grid_wlinf,
      variant_kind::grid_l2};
  return v;
}

inline const char* variant_name(variant_kind k) {
  switch (k) {
    case variant_kind::path: return "path";
    case variant_kind::groups: return "groups";
    case variant_kind::bilateral: return "bilateral";
    case variant_kind::grid_l1: return "grid-l1";
    case variant_kind::grid_linf: return "grid-linf";
    case variant_kind::grid_wlinf: return "grid-wlinf";
    case variant_kind::grid_l2: return "grid-l2";
  }
  return "?";
}

// Random instance of the given variant with at most max_edges edges.
// Deterministic in (kind, seed, max_edges).
inline instance make_variant_instance(variant_kind k, std::uint64_t seed, int max_edges) {
  gen_rng rng(seed);
  int a = rng.int_in(2, 6);
  int m = rng.int_in(1, max_edges);
  auto sub_seed = rng.eng();
  switch (k) {
    case variant_kind::path: {
      int b = rng.int_in(4, 14);
      rat s{rng.int_in(1, 3)};
      return gen_capped_instance(dim_kind::path, a, b, 0, s, {}, 1, false, m, sub_seed);
    }
    case variant_kind::groups: {
      int group = rng.int_in(2, 3);
      int b = rng.int_in(group + 2, 14);
      rat s{rng.int_in(1, 2)};
      return gen_capped_instance(dim_kind::path, a, b, 0, s, {}, group, false, m, sub_seed);
    }
    case variant_kind::bilateral: {
      int b = rng.int_in(4, 12);
      rat s{rng.int_in(1, 2)};
      instance g =
          gen_capped_instance(dim_kind::path, a, b, 0, s, {}, 1, true, m, sub_seed);
      return g;
    }
    case variant_kind::grid_l1: {
      int b1 = rng.int_in(3, 5), b2 = rng.int_in(3, 5);
      rat s{rng.int_in(1, 2)};
      return gen_capped_instance(dim_kind::grid, a, b1, b2, s,
                                 {metric_kind::l1, 1, 1}, 1, false, m, sub_seed);
    }
    case variant_kind::grid_linf: {
      int b1 = rng.int_in(3, 5), b2 = rng.int_in(3, 5);
      rat s{rng.int_in(2, 5), rng.int_in(1, 2)};
      return gen_capped_instance(dim_kind::grid, a, b1, b2, s,
                                 {metric_kind::linf, 1, 1}, 1, false, m, sub_seed);
    }
    case variant_kind::grid_wlinf: {
      int b1 = rng.int_in(3, 5), b2 = rng.int_in(3, 5);
      rat s{rng.int_in(2, 5), rng.int_in(1, 2)};
      rat wx{rng.int_in(1, 3), rng.int_in(1, 2)};
      rat wy{rng.int_in(1, 3), rng.int_in(1, 2)};
      return gen_capped_instance(dim_kind::grid, a, b1, b2, s,
                                 {metric_kind::wlinf, wx, wy}, 1, false, m, sub_seed);
    }
    case variant_kind::grid_l2: {
      int b1 = rng.int_in(3, 5), b2 = rng.int_in(3, 5);
      rat s{rng.int_in(2, 5), rng.int_in(1, 2)};
      return gen_capped_instance(dim_kind::grid, a, b1, b2, s,
                                 {metric_kind::l2, 1, 1}, 1, false, m, sub_seed);
    }
  }
  return {};
}

}  // namespace sepmatch::testing
