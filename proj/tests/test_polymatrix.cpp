#include <doctest.h>

#include <random>

#include "minrank/poly_matrix.hpp"

using namespace minrank;

namespace {

// independent oracle: determinant as the signed sum over all permutations
Polynomial permanent_style_det(const PolyMatrix& M, const std::vector<int>& rows,
                               const std::vector<int>& cols) {
  const std::size_t s = rows.size();
  std::vector<int> perm(s);
  for (std::size_t i = 0; i < s; ++i) perm[i] = static_cast<int>(i);
  Polynomial acc = Polynomial::zero(M.ambient());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = i + 1; j < s; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial prod = Polynomial::constant(M.ambient(), 1);
    for (std::size_t i = 0; i < s; ++i)
      prod = prod * M.entry(rows[i], cols[static_cast<std::size_t>(perm[i])]);
    acc = (inversions % 2 == 0) ? acc + prod : acc - prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

InstanceParams classical_params(int m, int n, int r, int k, std::uint32_t p) {
  return InstanceParams{InstanceKind::classical, m,    n, r, k, p,
                        true, DegreeMatrix::constant(m, n, 1)};
}

InstanceParams generalized_params(int m, int n, int r, int k, std::uint32_t p,
                                  bool homogeneous, DegreeMatrix degrees) {
  return InstanceParams{InstanceKind::generalized, m, n, r, k, p, homogeneous,
                        std::move(degrees)};
}

}  // namespace

TEST_CASE("degree matrix from offsets") {
  const DegreeMatrix D = DegreeMatrix::from_offsets({1, 1, 2}, {0, 1, 1});
  CHECK(D.grid() == std::vector<std::vector<int>>{{1, 2, 2}, {1, 2, 2}, {2, 3, 3}});
  CHECK(D.row_offsets() == std::vector<int>{1, 1, 2});
  CHECK(D.col_offsets() == std::vector<int>{0, 1, 1});

  const DegreeMatrix C = DegreeMatrix::from_offsets({3, 3}, {0, 0, 0});
  CHECK(C.constant_value() == 3);

  // d_{2,1} = 0 violates positivity
  CHECK_THROWS_AS(DegreeMatrix::from_offsets({1, 0}, {0, 1}), invalid_degree);
}

TEST_CASE("degree matrix validation") {
  const DegreeMatrix D = DegreeMatrix::validate({{1, 2}, {2, 3}});
  CHECK(D.row_offsets() == std::vector<int>{1, 2});
  CHECK(D.col_offsets() == std::vector<int>{0, 1});

  CHECK_THROWS_WITH_AS(DegreeMatrix::validate({{1, 1}, {1, 2}}),
                       doctest::Contains("additivity violated at (i,j,h,l) = "
                                         "(1,1,2,2)"),
                       invalid_degree);
  CHECK_NOTHROW(DegreeMatrix::validate({{5}}));
  CHECK_THROWS_AS(DegreeMatrix::validate({{1, 0}, {2, 1}}), invalid_degree);

  // rows get sorted by first-column degree; permutation is recorded
  const DegreeMatrix S = DegreeMatrix::validate({{2, 3}, {1, 2}});
  CHECK(S.grid() == std::vector<std::vector<int>>{{1, 2}, {2, 3}});
  CHECK(S.row_permutation() == std::vector<int>{1, 0});
}

TEST_CASE("validate composed with from_offsets is stable") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 200; ++it) {
    std::vector<int> e(3), f(4);
    for (auto& v : e) v = 1 + static_cast<int>(uniform_below(rng, 3));
    for (auto& v : f) v = static_cast<int>(uniform_below(rng, 3));
    const DegreeMatrix D = DegreeMatrix::from_offsets(e, f);
    const DegreeMatrix V = DegreeMatrix::validate(D.grid());
    CHECK(D == V);
    CHECK(V.row_permutation() == std::vector<int>{0, 1, 2});
    for (int i = 0; i < D.rows(); ++i)
      for (int j = 0; j < D.cols(); ++j)
        CHECK(D.at(i, j) == D.row_offsets()[static_cast<std::size_t>(i)] +
                                D.col_offsets()[static_cast<std::size_t>(j)]);
  }
}

TEST_CASE("single 2x2 minor is ad - bc") {
  const Ambient amb{4, FieldPrime(101)};
  std::vector<std::vector<Polynomial>> entries(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      entries[static_cast<std::size_t>(i)].push_back(
          Polynomial::variable(amb, 2 * i + j));
  const PolyMatrix M(DegreeMatrix::constant(2, 2, 1), std::move(entries));
  const MinorsSystem sys = minors(M, 2);
  REQUIRE(sys.count() == 1);
  CHECK(sys.generators()[0] == Polynomial::parse(amb, "x1*x4 - x2*x3"));
}

TEST_CASE("minor counts and ordering") {
  std::mt19937_64 rng(7);
  const auto inst = MinRankInstance::random(classical_params(3, 3, 1, 4, 101), 5);
  const MinorsSystem sys = minors(inst.matrix(), 2);
  CHECK(sys.count() == 9);  // C(3,2)^2
  CHECK(sys.index(0).str() == "{1,2}x{1,2}");
  CHECK(sys.index(1).str() == "{1,2}x{1,3}");
  CHECK(sys.index(8).str() == "{2,3}x{2,3}");
  CHECK_THROWS_AS(minors(inst.matrix(), 4), usage_error);
  const auto wide = MinRankInstance::random(classical_params(3, 5, 2, 4, 101), 5);
  CHECK(minors(wide.matrix(), 3).count() == binomial(3, 3) * binomial(5, 3));
}

TEST_CASE("matrix with two equal rows has zero minors") {
  const Ambient amb{2, FieldPrime(101)};
  const Polynomial a = Polynomial::parse(amb, "x1 + 2*x2");
  const Polynomial b = Polynomial::parse(amb, "3*x1 + x2");
  const PolyMatrix M = PolyMatrix::unchecked(DegreeMatrix::constant(2, 2, 1),
                                             {{a, b}, {a, b}});
  CHECK(minor_determinant(M, {0, 1}, {0, 1}).is_zero());
}

TEST_CASE("diagonal matrix determinant") {
  const Ambient amb{2, FieldPrime(101)};
  const Polynomial x1 = Polynomial::variable(amb, 0);
  const Polynomial x2 = Polynomial::variable(amb, 1);
  const Polynomial zero = Polynomial::zero(amb);
  const PolyMatrix M = PolyMatrix::unchecked(DegreeMatrix::constant(2, 2, 1),
                                             {{x1, zero}, {zero, x2}});
  CHECK(minor_determinant(M, {0, 1}, {0, 1}) == x1 * x2);
}

TEST_CASE("determinant agrees with the permutation-sum oracle") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 10; ++it) {
    const auto inst = MinRankInstance::random(
        generalized_params(3, 3, 1, 2, 101, false,
                           DegreeMatrix::constant(3, 3, 2)),
        100 + static_cast<std::uint64_t>(it));
    const std::vector<int> all{0, 1, 2};
    CHECK(minor_determinant(inst.matrix(), all, all) ==
          permanent_style_det(inst.matrix(), all, all));
  }
  // and on 4x4 linear matrices
  const auto inst4 =
      MinRankInstance::random(classical_params(4, 4, 2, 3, 101), 77);
  const std::vector<int> all4{0, 1, 2, 3};
  CHECK(minor_determinant(inst4.matrix(), all4, all4) ==
        permanent_style_det(inst4.matrix(), all4, all4));
}

TEST_CASE("homogeneous instances give homogeneous minors of predicted degree") {
  const DegreeMatrix D = DegreeMatrix::from_offsets({1, 1, 2}, {0, 1, 1});
  const auto inst = MinRankInstance::random(
      generalized_params(3, 3, 1, 4, 101, true, D), 42);
  const MinorsSystem sys = minors(inst.matrix(), 2);
  CHECK(sys.count() == 9);
  for (std::size_t i = 0; i < sys.count(); ++i) {
    CHECK(sys.generators()[i].is_homogeneous());
    CHECK(sys.generators()[i].degree() == sys.expected_degree(i));
    // expected degree = sum of row offsets + column offsets over the sets
    const MinorIndex& idx = sys.index(i);
    int expect = 0;
    for (int t = 0; t < 2; ++t)
      expect += D.row_offsets()[static_cast<std::size_t>(idx.rows[static_cast<std::size_t>(t)])] +
                D.col_offsets()[static_cast<std::size_t>(idx.cols[static_cast<std::size_t>(t)])];
    CHECK(sys.expected_degree(i) == expect);
  }
}

TEST_CASE("exact degree enforcement in generation") {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    // p=2 makes vanishing top coefficients likely: the resampling path runs
    const auto inst = MinRankInstance::random(
        generalized_params(2, 2, 1, 2, 2, false,
                           DegreeMatrix::constant(2, 2, 2)),
        seed);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(inst.matrix().entry(i, j).degree() == 2);
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst =
        MinRankInstance::random(classical_params(2, 3, 1, 1, 2), seed);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(inst.matrix().entry(i, j).degree() == 1);
  }
}

TEST_CASE("seed determinism") {
  const auto params = generalized_params(3, 3, 1, 4, 101, true,
                                         DegreeMatrix::constant(3, 3, 2));
  const auto a = MinRankInstance::random(params, 9);
  const auto b = MinRankInstance::random(params, 9);
  const auto c = MinRankInstance::random(params, 10);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      all_equal = all_equal && a.matrix().entry(i, j) == b.matrix().entry(i, j);
      any_diff = any_diff || a.matrix().entry(i, j) != c.matrix().entry(i, j);
    }
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("instance parameter validation") {
  CHECK_THROWS_AS(MinRankInstance::random(classical_params(3, 3, 3, 4, 101), 1),
                  usage_error);  // r < m violated
  CHECK_THROWS_AS(MinRankInstance::random(classical_params(4, 3, 1, 4, 101), 1),
                  usage_error);  // m > n
  CHECK_THROWS_AS(MinRankInstance::random(classical_params(3, 3, 1, 0, 101), 1),
                  usage_error);  // k < 1
  // classical with non-unit degrees
  CHECK_THROWS_AS(
      MinRankInstance::random(
          InstanceParams{InstanceKind::classical, 2, 2, 1, 2, 101, true,
                         DegreeMatrix::constant(2, 2, 2)},
          1),
      usage_error);
}

TEST_CASE("homogenize_matrix lifts every entry") {
  const auto inst = MinRankInstance::random(
      generalized_params(2, 3, 1, 3, 101, false,
                         DegreeMatrix::validate({{1, 2, 2}, {2, 3, 3}})),
      21);
  const PolyMatrix H = inst.matrix().homogenized();
  CHECK(H.ambient().nvars == 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(H.entry(i, j).is_homogeneous());
      CHECK(H.entry(i, j).degree() == inst.degrees().at(i, j));
      CHECK(H.entry(i, j).dehomogenize_last() == inst.matrix().entry(i, j));
    }
  }
  // already homogeneous matrices are unchanged up to ambient extension
  const auto hom = MinRankInstance::random(
      generalized_params(2, 2, 1, 2, 101, true, DegreeMatrix::constant(2, 2, 2)),
      33);
  const PolyMatrix H2 = hom.matrix().homogenized();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(H2.entry(i, j).dehomogenize_last() == hom.matrix().entry(i, j));
}

TEST_CASE("homogenization commutes with minors on conforming matrices") {
  std::mt19937_64 rng(1);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = MinRankInstance::random(
        generalized_params(3, 3, 1, 3, 101, false,
                           DegreeMatrix::from_offsets({1, 1, 2}, {0, 1, 1})),
        seed);
    CHECK(check_homogenization_commutes(inst.matrix(), 1));
  }
  // degree-deficient entry (declared 2, actual 1): commutation can fail
  const Ambient amb{2, FieldPrime(101)};
  const PolyMatrix bad = PolyMatrix::unchecked(
      DegreeMatrix::constant(2, 2, 2),
      {{Polynomial::parse(amb, "x1 + 1"), Polynomial::parse(amb, "x1^2")},
       {Polynomial::parse(amb, "x2^2"), Polynomial::parse(amb, "x1*x2")}});
  std::string offending;
  CHECK(!check_homogenization_commutes(bad, 1, &offending));
  CHECK(offending == "{1,2}x{1,2}");
}

TEST_CASE("rank <= r iff all minors vanish, exhaustively over small fields") {
  // the core equivalence behind the minors modeling, checked point-by-point
  for (std::uint32_t p : {5u, 7u}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto inst =
          MinRankInstance::random(classical_params(3, 3, 1, 2, p), seed);
      const MinorsSystem sys = minors(inst.matrix(), 2);
      for (std::uint32_t a = 0; a < p; ++a) {
        for (std::uint32_t b = 0; b < p; ++b) {
          const std::vector<std::uint32_t> pt{a, b};
          const bool low_rank = inst.matrix().evaluate(pt).rank() <= 1;
          bool vanish = true;
          for (const Polynomial& f : sys.generators())
            vanish = vanish && f.evaluate(pt) == 0;
          CHECK(low_rank == vanish);
        }
      }
    }
  }
  // and a generalized affine shape over F_7, k=3
  const auto inst = MinRankInstance::random(
      generalized_params(2, 2, 1, 3, 7, false, DegreeMatrix::constant(2, 2, 2)),
      4);
  const MinorsSystem sys = minors(inst.matrix(), 2);
  for (std::uint32_t a = 0; a < 7; ++a) {
    for (std::uint32_t b = 0; b < 7; ++b) {
      for (std::uint32_t c = 0; c < 7; ++c) {
        const std::vector<std::uint32_t> pt{a, b, c};
        const bool low_rank = inst.matrix().evaluate(pt).rank() <= 1;
        CHECK(low_rank == (sys.generators()[0].evaluate(pt) == 0));
      }
    }
  }
}

TEST_CASE("PolyMatrix rejects degree lies unless unchecked") {
  const Ambient amb{2, FieldPrime(101)};
  std::vector<std::vector<Polynomial>> entries{
      {Polynomial::parse(amb, "x1"), Polynomial::parse(amb, "x2")},
      {Polynomial::parse(amb, "x1 + x2"), Polynomial::parse(amb, "x1")}};
  CHECK_NOTHROW(PolyMatrix(DegreeMatrix::constant(2, 2, 1), entries));
  CHECK_THROWS_AS(PolyMatrix(DegreeMatrix::constant(2, 2, 2), entries),
                  usage_error);
  CHECK_NOTHROW(
      PolyMatrix::unchecked(DegreeMatrix::constant(2, 2, 2), entries));
}
