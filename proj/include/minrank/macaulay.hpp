#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minrank/groebner.hpp"
#include "minrank/polynomial.hpp"

namespace minrank {

struct DegreeStepRecord {
  int degree = 0;
  std::size_t rows = 0;  // monomial multiples of the generators at this degree
  std::size_t cols = 0;  // monomials of this degree
  std::size_t rank = 0;  // pivots after row reduction
  // Pivot monomials not divisible by any leading term found at lower degree.
  std::vector<Monomial> new_leading_terms;
};

// Rolling state across degrees: basis elements extracted so far, i.e. the
// reduced rows whose leading monomial was new at its degree.
struct MacaulayState {
  std::vector<Polynomial> found;
};

// Builds the degree-D Macaulay matrix of the homogeneous system F (rows:
// monomial multiples m*f_i with deg = D; columns: degree-D monomials in
// descending degrevlex), row-reduces it, and records the new leading
// monomials. D below the minimal generator degree yields an empty record.
DegreeStepRecord macaulay_step(const std::vector<Polynomial>& F, int D,
                               MacaulayState& state);

struct SolvingDegreeReport {
  int measured_solvdeg = 0;
  std::string method = "macaulay-stepper";
  std::vector<DegreeStepRecord> per_degree;
  std::int64_t bound = -1;  // negative when no bound was supplied
  bool bound_respected = true;
  // Independent certification data from the Buchberger oracle.
  int buchberger_max_degree = 0;
  bool lt_ideal_agrees = false;
  GroebnerBasis oracle;
};

struct SolvingDegreeOptions {
  int degree_cap = std::numeric_limits<int>::max();
  std::int64_t bound = -1;
  // Run one extra degree past the measured solving degree; its record must
  // show no new leading terms (stability check).
  bool stability_step = false;
};

// Measured solving degree of a homogeneous system: the smallest D such that
// the leading terms accumulated by the Macaulay stepper through degree D
// generate the leading-term ideal of a full Groebner basis, certified
// against an independent buchberger run.
SolvingDegreeReport solving_degree(const std::vector<Polynomial>& F,
                                   const SolvingDegreeOptions& options = {});

}  // namespace minrank
