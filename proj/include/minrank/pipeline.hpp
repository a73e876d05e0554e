#pragma once

#include <string>
#include <vector>

#include "minrank/bounds.hpp"
#include "minrank/macaulay.hpp"
#include "minrank/poly_matrix.hpp"

namespace minrank {

struct SolveOptions {
  int degree_cap = -1;  // negative: default to bound + 3
  bool force = false;   // solve over-determined instances anyway
  bool stability_step = false;
};

struct SolveOutcome {
  bounds::BoundReport bounds;
  SolvingDegreeReport report;
  bool homogenized = false;    // affine input was lifted before solving
  bool zero_dimensional = false;
  std::size_t minor_count = 0;
  // Non-generic draw markers: "zero-minor", "unit-ideal",
  // "dimension-mismatch". Empty for generic instances.
  std::vector<std::string> degeneracy_signals;
  double wall_ms = 0.0;
};

// Full measurement pipeline: bounds, minors, homogenization (after the
// commutation check) for affine inputs, instrumented solving-degree run.
SolveOutcome solve_instance(const MinRankInstance& instance,
                            const SolveOptions& options = {});

struct BruteForceResult {
  std::vector<std::vector<std::uint32_t>> solutions;  // rank <= r points
  std::uint64_t searched = 0;
  bool equivalence_holds = false;  // rank locus == minors' zero locus
};

// Exhaustive search over F_p^k (guarded at 10^7 points), cross-checking the
// rank-<=-r locus against the common zero locus of the (r+1)-minors.
// A mismatch raises invariant_violation.
BruteForceResult brute_force(const MinRankInstance& instance);

}  // namespace minrank
