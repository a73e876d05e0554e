#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "minrank/degree_matrix.hpp"
#include "minrank/poly_matrix.hpp"

namespace minrank::bounds {

enum class ProblemClass { under_defined, well_defined, over_determined };

std::string class_name(ProblemClass c);

// Compares the variable count k against the codimension (n-r)(m-r).
ProblemClass classify(int m, int n, int r, int k);

// Square well-defined case: n*r - r^2 + 1.
std::int64_t bound_square(int n, int r);
// Linear entries: m*r - r^2 + 1.
std::int64_t bound_linear(int m, int r);
// Constant entry degree d: (m-r)*(n*d - n + r) + 1.
std::int64_t bound_degd(int m, int n, int r, int d);
// General degree matrix:
//   (m-r)*sum_{i<=r} d_{i,i} + sum_{i>r} sum_{j>r} d_{i,j} - (m-r)(n-r) + 1.
std::int64_t bound_main(int m, int n, int r, const DegreeMatrix& D);

// k - (m-r)(n-r); only asserted for k >= (m-r)(n-r).
std::optional<std::int64_t> krull_dim(int m, int n, int r, int k);
// a-invariant of the generic determinantal ring:
//   -r*sum_{i<=m} d_{i,i} - sum_{i<=r} sum_{j>m} d_{i,j}.
std::int64_t a_invariant(int m, int n, int r, const DegreeMatrix& D);
// Castelnuovo-Mumford regularity of the minors ideal via the a-invariant:
//   a_invariant + sum_{i,j} d_{i,j} - (m-r)(n-r) + 1.
// Coincides with bound_main for every valid degree matrix.
std::int64_t regularity(int m, int n, int r, const DegreeMatrix& D);

struct BoundReport {
  int m, n, r, k;
  DegreeMatrix degrees;
  ProblemClass classification;
  bool applicable;  // k >= (m-r)(n-r); false means the bound is not proven
  std::int64_t bound_main;
  std::optional<std::int64_t> bound_square;  // present when m == n, all d = 1
  std::optional<std::int64_t> bound_linear;  // present when all d = 1
  std::optional<std::int64_t> bound_degd;    // present when d constant
  std::optional<std::int64_t> krull_dim;     // present when applicable
  std::int64_t a_invariant;
  std::int64_t regularity;
};

BoundReport bound_report(int m, int n, int r, int k, const DegreeMatrix& D);
BoundReport bound_report(const MinRankInstance& instance);

}  // namespace minrank::bounds
