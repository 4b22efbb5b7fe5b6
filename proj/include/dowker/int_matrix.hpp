#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace dowker {

// Dense arbitrary-precision integer matrix, row-major.  Entries are exact;
// nothing here may overflow.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  // raw row access for kernel loops
  mpz_class* row(std::size_t i) { return data_.data() + i * cols_; }
  const mpz_class* row(std::size_t i) const { return data_.data() + i * cols_; }

  bool is_zero() const;
  IntMatrix mul(const IntMatrix& other) const;

  // Exact determinant by Bareiss fraction-free elimination (square only).
  mpz_class determinant() const;

  bool operator==(const IntMatrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

}  // namespace dowker
