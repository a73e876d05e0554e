#include "minrank/poly_matrix.hpp"

#include <algorithm>
#include <bit>

namespace minrank {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i)
    b = b * static_cast<std::uint64_t>(n - k + i) /
        static_cast<std::uint64_t>(i);
  return b;
}

PolyMatrix::PolyMatrix(DegreeMatrix degrees,
                       std::vector<std::vector<Polynomial>> entries, bool check)
    : degrees_(std::move(degrees)),
      entries_(std::move(entries)),
      ambient_(entries_.at(0).at(0).ambient()) {
  const int m = degrees_.rows(), n = degrees_.cols();
  if (static_cast<int>(entries_.size()) != m)
    throw usage_error("PolyMatrix: row count mismatch");
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(entries_[static_cast<std::size_t>(i)].size()) != n)
      throw usage_error("PolyMatrix: column count mismatch");
    for (int j = 0; j < n; ++j) {
      const Polynomial& f = entry(i, j);
      if (f.ambient() != ambient_)
        throw usage_error("PolyMatrix: mixed ambients");
      if (check && f.degree() != degrees_.at(i, j))
        throw usage_error(
            "PolyMatrix: entry (" + std::to_string(i + 1) + "," +
            std::to_string(j + 1) + ") has degree " +
            std::to_string(f.degree()) + ", declared " +
            std::to_string(degrees_.at(i, j)));
    }
  }
}

PolyMatrix::PolyMatrix(DegreeMatrix degrees,
                       std::vector<std::vector<Polynomial>> entries)
    : PolyMatrix(std::move(degrees), std::move(entries), true) {}

PolyMatrix PolyMatrix::unchecked(DegreeMatrix degrees,
                                 std::vector<std::vector<Polynomial>> entries) {
  return PolyMatrix(std::move(degrees), std::move(entries), false);
}

PolyMatrix PolyMatrix::homogenized() const {
  std::vector<std::vector<Polynomial>> out;
  out.reserve(static_cast<std::size_t>(m()));
  for (int i = 0; i < m(); ++i) {
    std::vector<Polynomial> row;
    row.reserve(static_cast<std::size_t>(n()));
    for (int j = 0; j < n(); ++j) {
      const Polynomial& f = entry(i, j);
      // standard homogenization: lift to the actual degree (= the declared
      // d_{i,j} for conforming matrices)
      row.push_back(f.is_zero()
                        ? Polynomial::zero(Ambient{ambient_.nvars + 1,
                                                   ambient_.field})
                        : f.homogenize(f.degree()));
    }
    out.push_back(std::move(row));
  }
  // unchecked so that adversarial degree-deficient inputs stay representable
  return PolyMatrix::unchecked(degrees_, std::move(out));
}

FpMatrix PolyMatrix::evaluate(const std::vector<std::uint32_t>& point) const {
  FpMatrix out(ambient_.field, static_cast<std::size_t>(m()),
               static_cast<std::size_t>(n()));
  for (int i = 0; i < m(); ++i)
    for (int j = 0; j < n(); ++j)
      out.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          entry(i, j).evaluate(point);
  return out;
}

Polynomial minor_determinant(const PolyMatrix& M, const std::vector<int>& rows,
                             const std::vector<int>& cols) {
  const std::size_t s = rows.size();
  if (s == 0 || s != cols.size())
    throw usage_error("minor_determinant: need equal nonempty index sets");
  const Ambient& amb = M.ambient();
  // dp[mask] = det of the first popcount(mask) rows against the column
  // subset encoded by mask
  std::vector<Polynomial> dp(std::size_t{1} << s, Polynomial::zero(amb));
  dp[0] = Polynomial::constant(amb, 1);
  for (std::uint32_t mask = 1; mask < (1u << s); ++mask) {
    const int t = std::popcount(mask);  // row index t-1 is expanded
    Polynomial acc = Polynomial::zero(amb);
    int pos = 0;
    for (std::size_t c = 0; c < s; ++c) {
      if (!(mask & (1u << c))) continue;
      const Polynomial& e = M.entry(rows[static_cast<std::size_t>(t - 1)],
                                    cols[c]);
      if (!e.is_zero() && !dp[mask ^ (1u << c)].is_zero()) {
        Polynomial part = e * dp[mask ^ (1u << c)];
        const bool negative = ((t - 1) + pos) % 2 != 0;
        acc = negative ? acc - part : acc + part;
      }
      ++pos;
    }
    dp[mask] = std::move(acc);
  }
  return dp[(std::size_t{1} << s) - 1];
}

std::string MinorIndex::str() const {
  auto join = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) s += ',';
      s += std::to_string(v[i] + 1);
    }
    return s + "}";
  };
  return join(rows) + "x" + join(cols);
}

namespace {

// all size-element subsets of {0..limit-1} in lexicographic order
std::vector<std::vector<int>> combinations(int limit, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) cur[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.push_back(cur);
    int i = size - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == limit - size + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

MinorsSystem::MinorsSystem(const PolyMatrix& M, int size) : size_(size) {
  if (size < 1 || size > M.m())
    throw usage_error("minors: size must be between 1 and m");
  const auto row_sets = combinations(M.m(), size);
  const auto col_sets = combinations(M.n(), size);
  gens_.reserve(row_sets.size() * col_sets.size());
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) {
      gens_.push_back(minor_determinant(M, rs, cs));
      indices_.push_back(MinorIndex{rs, cs});
      int d = 0;
      for (int t = 0; t < size; ++t)
        d += M.degrees().at(rs[static_cast<std::size_t>(t)],
                            cs[static_cast<std::size_t>(t)]);
      expected_degrees_.push_back(d);
    }
  }
}

bool check_homogenization_commutes(const PolyMatrix& M, int r,
                                   std::string* offending) {
  const MinorsSystem affine(M, r + 1);
  const MinorsSystem lifted(M.homogenized(), r + 1);
  for (std::size_t i = 0; i < affine.count(); ++i) {
    const Polynomial& f = affine.generators()[i];
    const int target = affine.expected_degree(i);
    bool ok = f.degree() <= target;
    if (ok) ok = f.homogenize(target) == lifted.generators()[i];
    if (!ok) {
      if (offending != nullptr) *offending = affine.index(i).str();
      return false;
    }
  }
  return true;
}

std::string kind_name(InstanceKind k) {
  return k == InstanceKind::classical ? "classical" : "generalized";
}

InstanceKind kind_from_name(const std::string& name) {
  if (name == "classical") return InstanceKind::classical;
  if (name == "generalized") return InstanceKind::generalized;
  throw usage_error("unknown instance kind: " + name);
}

void validate_instance_params(const InstanceParams& params) {
  if (params.m < 1 || params.n < 1)
    throw usage_error("instance: m and n must be positive");
  if (params.m > params.n)
    throw usage_error("instance: m <= n required (transpose the problem)");
  if (params.r < 0 || params.r >= params.m)
    throw usage_error("instance: r < m required");
  if (params.k < 1 || params.k > 64)
    throw usage_error("instance: k must be in [1, 64]");
  if (params.degrees.rows() != params.m || params.degrees.cols() != params.n)
    throw usage_error("instance: degree matrix has wrong shape");
  if (params.kind == InstanceKind::classical) {
    if (!params.degrees.all_ones())
      throw usage_error("instance: classical kind requires an all-ones degree matrix");
    if (!params.homogeneous)
      throw usage_error("instance: classical instances are homogeneous");
  }
}

MinRankInstance::MinRankInstance(InstanceParams params, std::uint64_t seed)
    : params_(std::move(params)), field_(params_.p), seed_(seed) {
  validate_instance_params(params_);
}

const std::vector<FpMatrix>& MinRankInstance::scalar_matrices() const {
  if (params_.kind != InstanceKind::classical)
    throw usage_error("scalar_matrices: not a classical instance");
  return classical_;
}

namespace {

// induced matrix sum x_t * M_t; every entry must come out exactly linear
PolyMatrix induced_matrix(const InstanceParams& params,
                          const std::vector<FpMatrix>& mats) {
  const Ambient amb{params.k, FieldPrime(params.p)};
  std::vector<std::vector<Polynomial>> entries;
  entries.reserve(static_cast<std::size_t>(params.m));
  for (int i = 0; i < params.m; ++i) {
    std::vector<Polynomial> row;
    row.reserve(static_cast<std::size_t>(params.n));
    for (int j = 0; j < params.n; ++j) {
      std::vector<Term> terms;
      for (int t = 0; t < params.k; ++t) {
        const std::uint32_t c = mats[static_cast<std::size_t>(t)].at(
            static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        if (c != 0) terms.push_back(Term{c, Monomial::variable(params.k, t)});
      }
      row.push_back(Polynomial::from_terms(amb, std::move(terms)));
    }
    entries.push_back(std::move(row));
  }
  return PolyMatrix(DegreeMatrix::constant(params.m, params.n, 1),
                    std::move(entries));
}

}  // namespace

MinRankInstance MinRankInstance::from_classical(const InstanceParams& params,
                                                std::uint64_t seed,
                                                std::vector<FpMatrix> matrices) {
  if (params.kind != InstanceKind::classical)
    throw usage_error("from_classical: wrong kind");
  MinRankInstance inst(params, seed);
  if (static_cast<int>(matrices.size()) != params.k)
    throw usage_error("classical instance: expected k matrices");
  for (const FpMatrix& mat : matrices) {
    if (mat.rows() != static_cast<std::size_t>(params.m) ||
        mat.cols() != static_cast<std::size_t>(params.n))
      throw usage_error("classical instance: matrix shape mismatch");
    if (mat.field().modulus() != params.p)
      throw usage_error("classical instance: modulus mismatch");
  }
  inst.classical_ = std::move(matrices);
  inst.matrix_ = induced_matrix(params, inst.classical_);
  return inst;
}

MinRankInstance MinRankInstance::from_generalized(const InstanceParams& params,
                                                  std::uint64_t seed,
                                                  PolyMatrix M) {
  if (params.kind != InstanceKind::generalized)
    throw usage_error("from_generalized: wrong kind");
  MinRankInstance inst(params, seed);
  if (M.m() != params.m || M.n() != params.n)
    throw usage_error("generalized instance: matrix shape mismatch");
  if (M.ambient().nvars != params.k ||
      M.ambient().field.modulus() != params.p)
    throw usage_error("generalized instance: ambient mismatch");
  if (!(M.degrees() == params.degrees))
    throw usage_error("generalized instance: degree matrix mismatch");
  if (params.homogeneous)
    for (int i = 0; i < M.m(); ++i)
      for (int j = 0; j < M.n(); ++j)
        if (!M.entry(i, j).is_homogeneous())
          throw usage_error("generalized instance: entry (" +
                            std::to_string(i + 1) + "," +
                            std::to_string(j + 1) +
                            ") is not homogeneous as declared");
  inst.matrix_ = std::move(M);
  return inst;
}

MinRankInstance MinRankInstance::random(const InstanceParams& params,
                                        std::uint64_t seed) {
  validate_instance_params(params);
  std::mt19937_64 rng(seed);
  const FieldPrime F(params.p);

  if (params.kind == InstanceKind::classical) {
    std::vector<FpMatrix> mats(
        static_cast<std::size_t>(params.k),
        FpMatrix(F, static_cast<std::size_t>(params.m),
                 static_cast<std::size_t>(params.n)));
    for (int t = 0; t < params.k; ++t)
      for (int i = 0; i < params.m; ++i)
        for (int j = 0; j < params.n; ++j)
          mats[static_cast<std::size_t>(t)].at(static_cast<std::size_t>(i),
                                               static_cast<std::size_t>(j)) =
              random_element(rng, F).value();
    // exact-degree requirement on the induced matrix: no position may be
    // zero across all k matrices; redraw such positions
    for (int i = 0; i < params.m; ++i) {
      for (int j = 0; j < params.n; ++j) {
        for (;;) {
          bool all_zero = true;
          for (int t = 0; t < params.k && all_zero; ++t)
            all_zero = mats[static_cast<std::size_t>(t)].at(
                           static_cast<std::size_t>(i),
                           static_cast<std::size_t>(j)) == 0;
          if (!all_zero) break;
          for (int t = 0; t < params.k; ++t)
            mats[static_cast<std::size_t>(t)].at(static_cast<std::size_t>(i),
                                                 static_cast<std::size_t>(j)) =
                random_element(rng, F).value();
        }
      }
    }
    return from_classical(params, seed, std::move(mats));
  }

  const Ambient amb{params.k, F};
  std::vector<std::vector<Polynomial>> entries;
  entries.reserve(static_cast<std::size_t>(params.m));
  for (int i = 0; i < params.m; ++i) {
    std::vector<Polynomial> row;
    row.reserve(static_cast<std::size_t>(params.n));
    for (int j = 0; j < params.n; ++j) {
      const int d = params.degrees.at(i, j);
      const std::vector<Monomial> monos =
          params.homogeneous ? monomials_of_degree(params.k, d)
                             : monomials_up_to_degree(params.k, d);
      const std::size_t top = static_cast<std::size_t>(
          monomial_count(params.k, d));  // degree-d block comes first
      std::vector<Term> terms;
      terms.reserve(monos.size());
      for (const Monomial& mono : monos)
        terms.push_back(Term{random_element(rng, F).value(), mono});
      for (;;) {
        bool top_zero = true;
        for (std::size_t t = 0; t < top && top_zero; ++t)
          top_zero = terms[t].coeff == 0;
        if (!top_zero) break;
        for (std::size_t t = 0; t < top; ++t)
          terms[t].coeff = random_element(rng, F).value();
      }
      row.push_back(Polynomial::from_terms(amb, std::move(terms)));
    }
    entries.push_back(std::move(row));
  }
  return from_generalized(params, seed,
                          PolyMatrix(params.degrees, std::move(entries)));
}

}  // namespace minrank
