#pragma once

#include <vector>

#include "minrank/common.hpp"

namespace minrank {

// The m x n grid of entry degrees d_{i,j} with the additivity property
// d_{i,j} + d_{h,l} = d_{i,l} + d_{h,j}, equivalently d_{i,j} = e_i + f_j.
// Stored normalized: rows sorted so the first column is nondecreasing, and
// offsets fixed canonically as e_i = d_{i,1}, f_j = d_{1,j} - d_{1,1}.
class DegreeMatrix {
 public:
  // Builds d_{i,j} = e_i + f_j; every entry must be positive.
  static DegreeMatrix from_offsets(const std::vector<int>& e,
                                   const std::vector<int>& f);
  // Verifies positivity and additivity (reporting a violating quadruple),
  // sorts rows, and recovers the canonical offsets.
  static DegreeMatrix validate(const std::vector<std::vector<int>>& grid);
  static DegreeMatrix constant(int m, int n, int d);

  int rows() const { return m_; }
  int cols() const { return n_; }
  int at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(j)];
  }
  const std::vector<int>& row_offsets() const { return e_; }
  const std::vector<int>& col_offsets() const { return f_; }
  // row i of the normalized matrix came from input row row_permutation()[i]
  const std::vector<int>& row_permutation() const { return perm_; }

  bool all_ones() const;
  // d if every entry equals d, else -1.
  int constant_value() const;
  std::vector<std::vector<int>> grid() const;

  bool operator==(const DegreeMatrix& o) const {
    return m_ == o.m_ && n_ == o.n_ && entries_ == o.entries_;
  }

 private:
  DegreeMatrix() = default;
  static DegreeMatrix normalize(int m, int n, std::vector<int> entries);

  int m_ = 0, n_ = 0;
  std::vector<int> entries_;  // row-major
  std::vector<int> e_, f_;
  std::vector<int> perm_;
};

}  // namespace minrank
