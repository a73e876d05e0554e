#pragma once

#include <cstdint>
#include <vector>

#include "minrank/field.hpp"
#include "minrank/fp_kernels.hpp"

namespace minrank {

// Dense row-major matrix over F_p. Row operations go through the active
// F_p kernels (scalar reference or AVX2), which compute identical results.
class FpMatrix {
 public:
  FpMatrix(FieldPrime field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  const FieldPrime& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t& at(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  std::uint32_t at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::uint32_t* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
  const std::uint32_t* row_ptr(std::size_t i) const {
    return data_.data() + i * cols_;
  }

  bool operator==(const FpMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           data_ == o.data_;
  }

  // In-place reduced row echelon form (Gauss-Jordan, pivots chosen left to
  // right, first nonzero row wins). Returns the pivot column of each pivot
  // row, ascending.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

 private:
  FieldPrime field_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> data_;
};

}  // namespace minrank
