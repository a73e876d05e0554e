#include "minrank/degree_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace minrank {

namespace {

constexpr int kMaxDim = 64;
constexpr int kMaxEntry = 1 << 20;  // keeps every bound formula in int64 range

void check_dims(int m, int n) {
  if (m < 1 || n < 1) throw invalid_degree("degree matrix: empty dimension");
  if (m > kMaxDim || n > kMaxDim)
    throw invalid_degree("degree matrix: dimension exceeds cap of 64");
  if (m > n)
    throw invalid_degree(
        "degree matrix: m > n; transpose the problem so that m <= n");
}

}  // namespace

DegreeMatrix DegreeMatrix::normalize(int m, int n, std::vector<int> entries) {
  // stable row sort by first-column degree, remembering the permutation
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    return entries[static_cast<std::size_t>(a) * static_cast<std::size_t>(n)] <
           entries[static_cast<std::size_t>(b) * static_cast<std::size_t>(n)];
  });
  std::vector<int> sorted(entries.size());
  for (int i = 0; i < m; ++i)
    std::copy_n(
        entries.begin() + static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]) *
                              static_cast<std::size_t>(n),
        n, sorted.begin() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n));

  DegreeMatrix d;
  d.m_ = m;
  d.n_ = n;
  d.entries_ = std::move(sorted);
  d.perm_ = std::move(perm);
  d.e_.resize(static_cast<std::size_t>(m));
  d.f_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) d.e_[static_cast<std::size_t>(i)] = d.at(i, 0);
  for (int j = 0; j < n; ++j)
    d.f_[static_cast<std::size_t>(j)] = d.at(0, j) - d.at(0, 0);
  return d;
}

DegreeMatrix DegreeMatrix::from_offsets(const std::vector<int>& e,
                                        const std::vector<int>& f) {
  const int m = static_cast<int>(e.size());
  const int n = static_cast<int>(f.size());
  check_dims(m, n);
  std::vector<int> entries(static_cast<std::size_t>(m) *
                           static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const int d = e[static_cast<std::size_t>(i)] + f[static_cast<std::size_t>(j)];
      if (d <= 0)
        throw invalid_degree("degree matrix: entry d_{" + std::to_string(i + 1) +
                             "," + std::to_string(j + 1) +
                             "} = " + std::to_string(d) +
                             " is not positive");
      if (d > kMaxEntry)
        throw invalid_degree("degree matrix: entry exceeds cap of 2^20");
      entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(j)] = d;
    }
  }
  return normalize(m, n, std::move(entries));
}

DegreeMatrix DegreeMatrix::validate(const std::vector<std::vector<int>>& grid) {
  const int m = static_cast<int>(grid.size());
  if (m == 0) throw invalid_degree("degree matrix: empty grid");
  const int n = static_cast<int>(grid[0].size());
  check_dims(m, n);
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(grid[static_cast<std::size_t>(i)].size()) != n)
      throw invalid_degree("degree matrix: ragged grid");
    for (int j = 0; j < n; ++j) {
      const int d = grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (d <= 0)
        throw invalid_degree("degree matrix: entry d_{" + std::to_string(i + 1) +
                             "," + std::to_string(j + 1) + "} = " +
                             std::to_string(d) + " is not positive");
      if (d > kMaxEntry)
        throw invalid_degree("degree matrix: entry exceeds cap of 2^20");
      entries.push_back(d);
    }
  }
  auto at = [&](int i, int j) {
    return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(j)];
  };
  for (int i = 0; i < m; ++i)
    for (int h = i + 1; h < m; ++h)
      for (int j = 0; j < n; ++j)
        for (int l = j + 1; l < n; ++l)
          if (at(i, j) + at(h, l) != at(i, l) + at(h, j))
            throw invalid_degree(
                "degree matrix: additivity violated at (i,j,h,l) = (" +
                std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                std::to_string(h + 1) + "," + std::to_string(l + 1) + "): " +
                std::to_string(at(i, j)) + " + " + std::to_string(at(h, l)) +
                " != " + std::to_string(at(i, l)) + " + " +
                std::to_string(at(h, j)));
  return normalize(m, n, std::move(entries));
}

DegreeMatrix DegreeMatrix::constant(int m, int n, int d) {
  return from_offsets(std::vector<int>(static_cast<std::size_t>(m), d),
                      std::vector<int>(static_cast<std::size_t>(n), 0));
}

bool DegreeMatrix::all_ones() const { return constant_value() == 1; }

int DegreeMatrix::constant_value() const {
  const int d = entries_.front();
  for (int v : entries_)
    if (v != d) return -1;
  return d;
}

std::vector<std::vector<int>> DegreeMatrix::grid() const {
  std::vector<std::vector<int>> g(static_cast<std::size_t>(m_));
  for (int i = 0; i < m_; ++i) {
    g[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j)
      g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j);
  }
  return g;
}

}  // namespace minrank
