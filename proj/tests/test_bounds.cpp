#include <doctest.h>

#include <random>

#include "minrank/bounds.hpp"

using namespace minrank;
using namespace minrank::bounds;

TEST_CASE("classification against the codimension") {
  CHECK(classify(3, 3, 1, 4) == ProblemClass::well_defined);
  CHECK(classify(3, 3, 1, 5) == ProblemClass::under_defined);
  CHECK(classify(3, 3, 1, 3) == ProblemClass::over_determined);
  CHECK(classify(2, 5, 1, 4) == ProblemClass::well_defined);
  CHECK_THROWS_AS(classify(3, 3, 3, 4), usage_error);
  CHECK_THROWS_AS(classify(3, 3, 1, 0), usage_error);
  // the definition only sees the product (n-r)(m-r): shapes with equal
  // codimension classify identically for every k
  for (int k = 1; k <= 10; ++k) {
    CHECK(classify(2, 5, 1, k) == classify(3, 3, 1, k));  // both codim 4
    CHECK(classify(2, 7, 1, k) == classify(3, 4, 1, k));  // both codim 6
  }
}

TEST_CASE("closed-form bounds at pinned points") {
  // square case: n*r - r^2 + 1
  CHECK(bound_square(3, 1) == 3);
  CHECK(bound_square(4, 2) == 5);
  CHECK(bound_square(3, 0) == 1);  // minors of size 1, linear system
  // linear case: m*r - r^2 + 1
  CHECK(bound_linear(3, 1) == 3);
  CHECK(bound_linear(2, 1) == 2);
  CHECK(bound_linear(5, 1) == 5);
  // constant degree d: (m-r)(n*d - n + r) + 1
  CHECK(bound_degd(3, 3, 1, 2) == 9);
  CHECK(bound_degd(2, 2, 1, 1) == 2);
  CHECK(bound_degd(4, 4, 2, 1) == bound_linear(4, 2));
  // main formula on the worked degree matrix
  const DegreeMatrix D = DegreeMatrix::from_offsets({1, 1, 2}, {0, 1, 1});
  CHECK(bound_main(3, 3, 1, D) == 9);
  CHECK(bound_main(3, 3, 1, DegreeMatrix::constant(3, 3, 1)) == 3);
}

TEST_CASE("regularity chain at pinned points") {
  CHECK(krull_dim(3, 3, 1, 4) == 0);
  CHECK(krull_dim(3, 3, 1, 6) == 2);
  CHECK(!krull_dim(3, 3, 1, 3).has_value());  // over-determined: not asserted
  const DegreeMatrix D = DegreeMatrix::from_offsets({1, 1, 2}, {0, 1, 1});
  CHECK(a_invariant(3, 3, 1, D) == -6);
  CHECK(regularity(3, 3, 1, D) == 9);
  const DegreeMatrix ones33 = DegreeMatrix::constant(3, 3, 1);
  CHECK(a_invariant(3, 3, 1, ones33) == -3);
  CHECK(regularity(3, 3, 1, ones33) == 3);
  // wide case picks up the second sum: m=2, n=3, r=1, all d=1
  const DegreeMatrix ones23 = DegreeMatrix::constant(2, 3, 1);
  CHECK(a_invariant(2, 3, 1, ones23) == -3);
}

TEST_CASE("regularity equals the main bound on random degree matrices") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 1000; ++it) {
    const int m = 1 + static_cast<int>(uniform_below(rng, 5));
    const int n = m + static_cast<int>(uniform_below(rng, 3));
    std::vector<int> e(static_cast<std::size_t>(m)), f(static_cast<std::size_t>(n));
    for (auto& v : e) v = 1 + static_cast<int>(uniform_below(rng, 6));
    for (auto& v : f) v = static_cast<int>(uniform_below(rng, 6));
    const DegreeMatrix D = DegreeMatrix::from_offsets(e, f);
    for (int r = 0; r < m; ++r)
      CHECK(regularity(m, n, r, D) == bound_main(m, n, r, D));
  }
}

TEST_CASE("reductions of the main bound") {
  std::mt19937_64 rng(6);
  for (int m = 1; m <= 5; ++m) {
    for (int n = m; n <= 5; ++n) {
      for (int r = 0; r < m; ++r) {
        CHECK(bound_main(m, n, r, DegreeMatrix::constant(m, n, 1)) ==
              bound_linear(m, r));
        for (int d = 1; d <= 5; ++d)
          CHECK(bound_main(m, n, r, DegreeMatrix::constant(m, n, d)) ==
                bound_degd(m, n, r, d));
        CHECK(bound_degd(m, n, r, 1) == bound_linear(m, r));
        if (m == n) CHECK(bound_square(n, r) == bound_linear(n, r));
      }
    }
  }
}

TEST_CASE("monotonicity of the main bound in the degrees") {
  // strictly increasing in every d_{i,j} with i,j > r, non-decreasing overall
  for (int m = 2; m <= 4; ++m) {
    for (int n = m; n <= 4; ++n) {
      for (int r = 1; r < m; ++r) {
        const DegreeMatrix base = DegreeMatrix::constant(m, n, 2);
        const std::int64_t b0 = bound_main(m, n, r, base);
        // bump a tail entry via offsets: increase e_m (last row)
        std::vector<int> e(static_cast<std::size_t>(m), 2), f(static_cast<std::size_t>(n), 0);
        e.back() = 3;
        CHECK(bound_main(m, n, r, DegreeMatrix::from_offsets(e, f)) > b0);
        // increasing every entry never decreases the bound
        CHECK(bound_main(m, n, r, DegreeMatrix::constant(m, n, 3)) >= b0);
      }
    }
  }
}

TEST_CASE("bound report aggregates") {
  const DegreeMatrix ones = DegreeMatrix::constant(3, 3, 1);
  const BoundReport rep = bound_report(3, 3, 1, 4, ones);
  CHECK(rep.classification == ProblemClass::well_defined);
  CHECK(rep.applicable);
  CHECK(rep.bound_main == 3);
  CHECK(rep.bound_square == 3);
  CHECK(rep.bound_linear == 3);
  CHECK(rep.bound_degd == 3);
  CHECK(rep.krull_dim == 0);
  CHECK(rep.regularity == rep.bound_main);

  const BoundReport two =
      bound_report(3, 3, 1, 4, DegreeMatrix::constant(3, 3, 2));
  CHECK(two.bound_main == 9);
  CHECK(!two.bound_square.has_value());
  CHECK(!two.bound_linear.has_value());
  CHECK(two.bound_degd == 9);

  const BoundReport over = bound_report(3, 3, 1, 3, ones);
  CHECK(over.classification == ProblemClass::over_determined);
  CHECK(!over.applicable);
  CHECK(!over.krull_dim.has_value());
  CHECK(over.bound_main == 3);  // still computed, flagged unproven

  const DegreeMatrix mixed = DegreeMatrix::from_offsets({1, 1, 2}, {0, 1, 1});
  const BoundReport main = bound_report(3, 3, 1, 4, mixed);
  CHECK(main.bound_main == 9);
  CHECK(!main.bound_degd.has_value());
  CHECK(main.a_invariant == -6);
}
