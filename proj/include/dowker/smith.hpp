#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dowker/int_matrix.hpp"

namespace dowker {

// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r > 0.
struct SmithResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};

// Dense Smith normal form with minimal-|entry| pivoting.  The parallel
// variant distributes the row/column update sweeps across OpenMP threads and
// produces bit-identical output (all arithmetic is exact and the pivot
// sequence is shared).  smith_normal_form picks the parallel one when built
// with OpenMP and the matrix is big enough to pay for it.
SmithResult smith_normal_form_serial(const IntMatrix& M);
SmithResult smith_normal_form_parallel(const IntMatrix& M);
SmithResult smith_normal_form(const IntMatrix& M);

// Sparse integer matrix in column-major triplet form, for boundary operators.
class SparseIntMatrix {
public:
  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void add_entry(std::size_t i, std::size_t j, mpz_class v);  // accumulates
  const std::map<std::pair<std::size_t, std::size_t>, mpz_class>& entries() const {
    return entries_;
  }

  IntMatrix to_dense() const;
  SparseIntMatrix mul(const SparseIntMatrix& other) const;
  SparseIntMatrix negated() const;
  bool is_zero() const;

  bool operator==(const SparseIntMatrix&) const = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, mpz_class> entries_;  // no zeros stored
};

// Rank and invariant factors (the diagonal of the Smith form, 1s included).
// Eliminates on ±1 pivots sparsely first — boundary matrices are unit-heavy,
// and a unit pivot splits off a factor of 1 exactly — then finishes the small
// residual densely.
struct InvariantFactors {
  std::size_t rank = 0;
  std::vector<mpz_class> factors;  // size == rank, divisibility chain
};

InvariantFactors invariant_factors(const SparseIntMatrix& M);

}  // namespace dowker
