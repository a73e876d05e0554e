#pragma once

#include <limits>
#include <vector>

#include "minrank/polynomial.hpp"

namespace minrank {

// Normal form of f modulo G: no term of the result is divisible by any
// leading monomial of G. Deterministic: reducers are tried in list order,
// leading term first.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G);
// Same, also reporting the maximum degree of the intermediate results.
Polynomial reduce_tracked(const Polynomial& f,
                          const std::vector<Polynomial>& G, int& max_degree);

Polynomial spoly(const Polynomial& f, const Polynomial& g);

struct GroebnerBasis {
  // Reduced basis: monic, interreduced, sorted ascending by leading monomial.
  std::vector<Polynomial> generators;
  // Highest degree of any polynomial appearing during the computation
  // (inputs, S-polynomials, intermediate reduction results).
  int max_degree_seen = 0;
  bool ideal_is_unit = false;
};

struct BuchbergerOptions {
  // Aborts (engine_abort) when a nonzero reduction result of a higher degree
  // would be admitted to the basis. Transient S-polynomials above the cap
  // that reduce to zero are fine.
  int degree_cap = std::numeric_limits<int>::max();
};

// Buchberger's algorithm with normal (lowest lcm degree first) pair
// selection and the product and chain criteria; returns the reduced
// degrevlex Groebner basis.
GroebnerBasis buchberger(const std::vector<Polynomial>& F,
                         const BuchbergerOptions& options = {});

// True iff every variable has a pure power among the leading monomials:
// the combinatorial certificate that the quotient is zero-dimensional.
bool is_zero_dimensional(const GroebnerBasis& G);

}  // namespace minrank
