#pragma once

#include <stdexcept>

namespace sepmatch {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File / field level problems in serialized inputs.
struct parse_error : error {
  using error::error;
};

// A matching that breaks structural invariants (repeated A-vertex,
// repeated position, pair that is not an instance edge).
struct invalid_matching_error : error {
  using error::error;
};

// Solver or reduction invoked on an instance variant it does not handle.
struct wrong_solver_error : error {
  using error::error;
};

// Exact / exhaustive routine asked to run above its configured size cap.
struct size_cap_error : error {
  using error::error;
};

// Local-search budget exceeded (large t on a large graph).
struct budget_error : error {
  using error::error;
};

// Instance shape does not match what an operation needs
// (e.g. non-interval neighborhoods).
struct structure_error : error {
  using error::error;
};

// Matching <-> independent-set translation handed inconsistent data.
struct correspondence_error : error {
  using error::error;
};

// Hardness-gadget construction preconditions violated.
struct gadget_error : error {
  using error::error;
};

// Packing <-> matching mapping handed a non-packing or infeasible matching.
struct mapping_error : error {
  using error::error;
};

// Unit ball that is not convex or not centrally symmetric.
struct invalid_norm_error : error {
  using error::error;
};

}  // namespace sepmatch
