#include "minrank/fp_matrix.hpp"

#include <algorithm>

namespace minrank {

std::vector<std::size_t> FpMatrix::rref() {
  const auto& K = kernels::active_kernels();
  const std::uint32_t p = field_.modulus();
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < cols_ && next_row < rows_; ++col) {
    std::size_t pivot = next_row;
    while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != next_row)
      std::swap_ranges(row_ptr(pivot), row_ptr(pivot) + cols_,
                       row_ptr(next_row));
    const std::uint32_t lead = at(next_row, col);
    if (lead != 1)
      K.scale(row_ptr(next_row) + col, cols_ - col, field_.inv(lead), p);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == next_row) continue;
      const std::uint32_t v = at(i, col);
      if (v == 0) continue;
      K.axpy(row_ptr(i) + col, row_ptr(next_row) + col, cols_ - col,
             field_.neg(v), p);
    }
    pivots.push_back(col);
    ++next_row;
  }
  return pivots;
}

std::size_t FpMatrix::rank() const {
  FpMatrix copy(*this);
  return copy.rref().size();
}

}  // namespace minrank
