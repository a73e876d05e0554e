#include "minrank/bounds.hpp"

namespace minrank::bounds {

namespace {

void check_params(int m, int n, int r) {
  if (m < 1 || n < 1 || m > 64 || n > 64)
    throw usage_error("bounds: m, n must be in [1, 64]");
  if (m > n) throw usage_error("bounds: m <= n required");
  if (r < 0 || r >= m) throw usage_error("bounds: 0 <= r < m required");
}

}  // namespace

std::string class_name(ProblemClass c) {
  switch (c) {
    case ProblemClass::under_defined:
      return "under-defined";
    case ProblemClass::well_defined:
      return "well-defined";
    case ProblemClass::over_determined:
      return "over-determined";
  }
  return "?";
}

ProblemClass classify(int m, int n, int r, int k) {
  check_params(m, n, r);
  if (k < 1) throw usage_error("bounds: k must be positive");
  const std::int64_t codim =
      static_cast<std::int64_t>(n - r) * static_cast<std::int64_t>(m - r);
  if (k > codim) return ProblemClass::under_defined;
  if (k == codim) return ProblemClass::well_defined;
  return ProblemClass::over_determined;
}

std::int64_t bound_square(int n, int r) {
  check_params(n, n, r);
  return static_cast<std::int64_t>(n) * r - static_cast<std::int64_t>(r) * r +
         1;
}

std::int64_t bound_linear(int m, int r) {
  check_params(m, m, r);
  return static_cast<std::int64_t>(m) * r - static_cast<std::int64_t>(r) * r +
         1;
}

std::int64_t bound_degd(int m, int n, int r, int d) {
  check_params(m, n, r);
  if (d < 1) throw usage_error("bounds: d must be positive");
  return static_cast<std::int64_t>(m - r) *
             (static_cast<std::int64_t>(n) * d - n + r) +
         1;
}

std::int64_t bound_main(int m, int n, int r, const DegreeMatrix& D) {
  check_params(m, n, r);
  if (D.rows() != m || D.cols() != n)
    throw usage_error("bounds: degree matrix shape mismatch");
  std::int64_t diag = 0;
  for (int i = 0; i < r; ++i) diag += D.at(i, i);
  std::int64_t tail = 0;
  for (int i = r; i < m; ++i)
    for (int j = r; j < n; ++j) tail += D.at(i, j);
  return static_cast<std::int64_t>(m - r) * diag + tail -
         static_cast<std::int64_t>(m - r) * (n - r) + 1;
}

std::optional<std::int64_t> krull_dim(int m, int n, int r, int k) {
  check_params(m, n, r);
  const std::int64_t codim =
      static_cast<std::int64_t>(m - r) * static_cast<std::int64_t>(n - r);
  if (k < codim) return std::nullopt;
  return k - codim;
}

std::int64_t a_invariant(int m, int n, int r, const DegreeMatrix& D) {
  check_params(m, n, r);
  if (D.rows() != m || D.cols() != n)
    throw usage_error("bounds: degree matrix shape mismatch");
  std::int64_t diag = 0;
  for (int i = 0; i < m; ++i) diag += D.at(i, i);
  std::int64_t wide = 0;  // empty when m == n
  for (int i = 0; i < r; ++i)
    for (int j = m; j < n; ++j) wide += D.at(i, j);
  return -static_cast<std::int64_t>(r) * diag - wide;
}

std::int64_t regularity(int m, int n, int r, const DegreeMatrix& D) {
  std::int64_t total = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) total += D.at(i, j);
  return a_invariant(m, n, r, D) + total -
         static_cast<std::int64_t>(m - r) * (n - r) + 1;
}

BoundReport bound_report(int m, int n, int r, int k, const DegreeMatrix& D) {
  BoundReport rep{m,
                  n,
                  r,
                  k,
                  D,
                  classify(m, n, r, k),
                  false,
                  bound_main(m, n, r, D),
                  std::nullopt,
                  std::nullopt,
                  std::nullopt,
                  krull_dim(m, n, r, k),
                  a_invariant(m, n, r, D),
                  regularity(m, n, r, D)};
  rep.applicable = rep.classification != ProblemClass::over_determined;
  const int d = D.constant_value();
  if (d == 1) {
    rep.bound_linear = bound_linear(m, r);
    if (m == n) rep.bound_square = bound_square(n, r);
  }
  if (d > 0) rep.bound_degd = bound_degd(m, n, r, d);
  return rep;
}

BoundReport bound_report(const MinRankInstance& instance) {
  return bound_report(instance.m(), instance.n(), instance.r(), instance.k(),
                      instance.degrees());
}

}  // namespace minrank::bounds
