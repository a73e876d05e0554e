#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minrank/degree_matrix.hpp"
#include "minrank/fp_matrix.hpp"
#include "minrank/polynomial.hpp"

namespace minrank {

std::uint64_t binomial(int n, int k);

// Matrix of polynomials whose entry degrees match the declared DegreeMatrix
// exactly (zero entries are forbidden). Requires m <= n.
class PolyMatrix {
 public:
  PolyMatrix(DegreeMatrix degrees,
             std::vector<std::vector<Polynomial>> entries);
  // Skips the exact-degree check; for adversarial/degenerate inputs in tests
  // and negative checks.
  static PolyMatrix unchecked(DegreeMatrix degrees,
                              std::vector<std::vector<Polynomial>> entries);

  int m() const { return degrees_.rows(); }
  int n() const { return degrees_.cols(); }
  const Ambient& ambient() const { return ambient_; }
  const DegreeMatrix& degrees() const { return degrees_; }
  const Polynomial& entry(int i, int j) const {
    return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  // Every entry homogenized (to its actual degree, which equals the declared
  // d_{i,j} for conforming matrices), in k+1 variables.
  PolyMatrix homogenized() const;
  FpMatrix evaluate(const std::vector<std::uint32_t>& point) const;

 private:
  PolyMatrix(DegreeMatrix degrees, std::vector<std::vector<Polynomial>> entries,
             bool check);

  DegreeMatrix degrees_;
  std::vector<std::vector<Polynomial>> entries_;
  Ambient ambient_;
};

// Exact determinant of the (rows x cols) submatrix by division-free dynamic
// programming over column subsets (Laplace expansion memoized per row
// prefix).
Polynomial minor_determinant(const PolyMatrix& M, const std::vector<int>& rows,
                             const std::vector<int>& cols);

struct MinorIndex {
  std::vector<int> rows, cols;  // 0-based, strictly increasing
  std::string str() const;      // "{1,2}x{1,3}" (1-based for reporting)
};

// All size x size minors of M in lexicographic (row-set, column-set) order.
class MinorsSystem {
 public:
  MinorsSystem(const PolyMatrix& M, int size);

  const std::vector<Polynomial>& generators() const { return gens_; }
  const MinorIndex& index(std::size_t i) const { return indices_[i]; }
  // Sum of d_{i_t, j_t} along the diagonal pairing of the sorted index sets
  // (well-defined by the additivity condition).
  int expected_degree(std::size_t i) const { return expected_degrees_[i]; }
  std::size_t count() const { return gens_.size(); }
  int size() const { return size_; }

 private:
  int size_;
  std::vector<Polynomial> gens_;
  std::vector<MinorIndex> indices_;
  std::vector<int> expected_degrees_;
};

inline MinorsSystem minors(const PolyMatrix& M, int size) {
  return MinorsSystem(M, size);
}

// True iff homogenizing each (r+1)-minor of M to its expected degree yields
// exactly the corresponding minor of the entry-wise homogenized matrix. Holds
// for every conforming (exact-degree) matrix; a degree-deficient entry can
// break it. On failure *offending names the first bad minor.
bool check_homogenization_commutes(const PolyMatrix& M, int r,
                                   std::string* offending = nullptr);

enum class InstanceKind { classical, generalized };

std::string kind_name(InstanceKind k);
InstanceKind kind_from_name(const std::string& name);

struct InstanceParams {
  InstanceKind kind;
  int m, n, r, k;
  std::uint32_t p;
  bool homogeneous;      // classical instances are always homogeneous
  DegreeMatrix degrees;  // all ones for classical
};

// A classical (k scalar matrices, M = sum x_i M_i) or generalized
// (polynomial matrix) MinRank instance. Immutable once constructed.
class MinRankInstance {
 public:
  // Generic random instance: i.i.d. uniform coefficients, with the top-degree
  // block of every entry resampled until nonzero so declared degrees are
  // attained exactly. Fully determined by the seed.
  static MinRankInstance random(const InstanceParams& params,
                                std::uint64_t seed);
  static MinRankInstance from_classical(const InstanceParams& params,
                                        std::uint64_t seed,
                                        std::vector<FpMatrix> matrices);
  static MinRankInstance from_generalized(const InstanceParams& params,
                                          std::uint64_t seed, PolyMatrix M);

  InstanceKind kind() const { return params_.kind; }
  int m() const { return params_.m; }
  int n() const { return params_.n; }
  int r() const { return params_.r; }
  int k() const { return params_.k; }
  const FieldPrime& field() const { return field_; }
  bool homogeneous() const { return params_.homogeneous; }
  std::uint64_t seed() const { return seed_; }
  const DegreeMatrix& degrees() const { return params_.degrees; }
  const InstanceParams& params() const { return params_; }

  // Classical payload; usage error on generalized instances.
  const std::vector<FpMatrix>& scalar_matrices() const;
  // The polynomial matrix (induced sum for classical instances).
  const PolyMatrix& matrix() const { return *matrix_; }

 private:
  MinRankInstance(InstanceParams params, std::uint64_t seed);

  InstanceParams params_;
  FieldPrime field_;
  std::uint64_t seed_;
  std::vector<FpMatrix> classical_;
  std::optional<PolyMatrix> matrix_;
};

void validate_instance_params(const InstanceParams& params);

}  // namespace minrank
