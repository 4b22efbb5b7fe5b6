#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "dowker/errors.hpp"
#include "dowker/smith.hpp"

namespace dowker {

// Field objects carry the arithmetic so the matrix code can stay generic;
// Zp elements are canonical residues, so raw == on elements is sound.
struct Rationals {
  using elem = mpq_class;
  elem zero() const { return 0; }
  elem one() const { return 1; }
  elem from_int(const mpz_class& z) const { return mpq_class(z); }
  elem add(const elem& a, const elem& b) const { return a + b; }
  elem sub(const elem& a, const elem& b) const { return a - b; }
  elem mul(const elem& a, const elem& b) const { return a * b; }
  elem neg(const elem& a) const { return -a; }
  elem inv(const elem& a) const {
    if (a == 0) fail(errc::not_invertible, "division by zero");
    return 1 / a;
  }
  bool is_zero(const elem& a) const { return a == 0; }
};

struct PrimeField {
  std::uint64_t p;

  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (p < 2 || p >= (std::uint64_t(1) << 31)) fail(errc::parse_error, "field order out of range");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) fail(errc::parse_error, std::to_string(p) + " is not prime");
  }

  using elem = std::uint64_t;
  elem zero() const { return 0; }
  elem one() const { return 1 % p; }
  elem from_int(const mpz_class& z) const {
    mpz_class m = z % static_cast<long>(p);
    if (m < 0) m += static_cast<long>(p);
    return m.get_ui();
  }
  elem add(elem a, elem b) const { return (a + b) % p; }
  elem sub(elem a, elem b) const { return (a + p - b) % p; }
  elem mul(elem a, elem b) const { return (a * b) % p; }  // p < 2^31 keeps this exact
  elem neg(elem a) const { return (p - a) % p; }
  elem inv(elem a) const {
    if (a == 0) fail(errc::not_invertible, "division by zero");
    elem r = 1, base = a % p;
    std::uint64_t e = p - 2;  // Fermat
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  bool is_zero(elem a) const { return a == 0; }
};

// Dense column-major matrix over a field object; the homology routines work
// with column spans throughout.
template <class F>
struct FieldMatrix {
  using elem = typename F::elem;
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<elem>> col;

  FieldMatrix() = default;
  FieldMatrix(const F& f, std::size_t r, std::size_t c)
      : rows(r), cols(c), col(c, std::vector<elem>(r, f.zero())) {}

  elem& at(std::size_t i, std::size_t j) { return col[j][i]; }
  const elem& at(std::size_t i, std::size_t j) const { return col[j][i]; }

  void push_col(std::vector<elem> v) {
    col.push_back(std::move(v));
    ++cols;
  }

  bool operator==(const FieldMatrix&) const = default;
};

template <class F>
FieldMatrix<F> to_field(const F& f, const SparseIntMatrix& m) {
  FieldMatrix<F> out(f, m.rows(), m.cols());
  for (const auto& [ij, v] : m.entries()) out.at(ij.first, ij.second) = f.from_int(v);
  return out;
}

template <class F>
FieldMatrix<F> field_identity(const F& f, std::size_t n) {
  FieldMatrix<F> out(f, n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = f.one();
  return out;
}

template <class F>
FieldMatrix<F> field_mul(const F& f, const FieldMatrix<F>& a, const FieldMatrix<F>& b) {
  if (a.cols != b.rows) fail(errc::too_large, "field product shape mismatch");
  FieldMatrix<F> out(f, a.rows, b.cols);
  for (std::size_t j = 0; j < b.cols; ++j)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const auto& s = b.at(k, j);
      if (f.is_zero(s)) continue;
      for (std::size_t i = 0; i < a.rows; ++i)
        if (!f.is_zero(a.at(i, k))) out.at(i, j) = f.add(out.at(i, j), f.mul(a.at(i, k), s));
    }
  return out;
}

// Incremental Gaussian eliminator over columns.  Pivot = first non-zero row,
// so everything downstream is deterministic.
template <class F>
class Eliminator {
public:
  Eliminator(const F& f, std::size_t rows) : f_(f), rows_(rows) {}

  void reduce(std::vector<typename F::elem>& v) const {
    for (std::size_t k = 0; k < echelon_.size(); ++k) {
      const auto& x = v[pivot_[k]];
      if (f_.is_zero(x)) continue;
      auto s = f_.mul(x, pivot_inv_[k]);
      const auto& c = echelon_[k];
      for (std::size_t i = 0; i < rows_; ++i)
        if (!f_.is_zero(c[i])) v[i] = f_.sub(v[i], f_.mul(s, c[i]));
    }
  }

  // true (and the column is absorbed) iff v is independent of what came before
  bool add(std::vector<typename F::elem> v) {
    reduce(v);
    for (std::size_t i = 0; i < rows_; ++i)
      if (!f_.is_zero(v[i])) {
        pivot_.push_back(i);
        pivot_inv_.push_back(f_.inv(v[i]));
        echelon_.push_back(std::move(v));
        return true;
      }
    return false;
  }

  std::size_t rank() const { return echelon_.size(); }

private:
  F f_;
  std::size_t rows_;
  std::vector<std::vector<typename F::elem>> echelon_;
  std::vector<std::size_t> pivot_;
  std::vector<typename F::elem> pivot_inv_;
};

template <class F>
std::size_t field_rank(const F& f, const FieldMatrix<F>& m) {
  Eliminator<F> e(f, m.rows);
  for (std::size_t j = 0; j < m.cols; ++j) e.add(m.col[j]);
  return e.rank();
}

// Kernel basis via column reduction with combination tracking; the kernel
// vectors are the combinations of columns that reduced to zero.
template <class F>
FieldMatrix<F> kernel_basis(const F& f, const FieldMatrix<F>& m) {
  Eliminator<F> e(f, m.rows);
  Eliminator<F> tracked(f, m.rows + m.cols);  // [column; combination] stacked
  FieldMatrix<F> kernel(f, m.cols, 0);
  for (std::size_t j = 0; j < m.cols; ++j) {
    std::vector<typename F::elem> stacked(m.rows + m.cols, f.zero());
    for (std::size_t i = 0; i < m.rows; ++i) stacked[i] = m.at(i, j);
    stacked[m.rows + j] = f.one();
    // reduce only by the column part: emulate by reducing the stacked vector
    // against stacked echelon columns whose pivots lie in the column part
    tracked.reduce(stacked);
    bool zero_col = true;
    for (std::size_t i = 0; i < m.rows; ++i)
      if (!f.is_zero(stacked[i])) {
        zero_col = false;
        break;
      }
    if (zero_col) {
      std::vector<typename F::elem> comb(stacked.begin() + static_cast<std::ptrdiff_t>(m.rows),
                                         stacked.end());
      kernel.push_col(std::move(comb));
    } else {
      tracked.add(std::move(stacked));
    }
  }
  return kernel;
}

// Exact solver for A x = w over the span of previously fed columns, tracking
// combinations so solutions come out in terms of the original columns.
template <class F>
class Solver {
public:
  Solver(const F& f, const FieldMatrix<F>& A) : f_(f), rows_(A.rows), n_(A.cols) {
    for (std::size_t j = 0; j < A.cols; ++j) {
      std::vector<typename F::elem> v = A.col[j];
      std::vector<typename F::elem> t(n_, f_.zero());
      t[j] = f_.one();
      reduce_pair(v, t);
      for (std::size_t i = 0; i < rows_; ++i)
        if (!f_.is_zero(v[i])) {
          pivot_.push_back(i);
          pivot_inv_.push_back(f_.inv(v[i]));
          echelon_.push_back(std::move(v));
          track_.push_back(std::move(t));
          break;
        }
    }
  }

  // coefficients x with A x = w; NotInvertible if w is outside the span
  std::vector<typename F::elem> solve(const std::vector<typename F::elem>& w) const {
    std::vector<typename F::elem> v = w;
    std::vector<typename F::elem> x(n_, f_.zero());
    for (std::size_t k = 0; k < echelon_.size(); ++k) {
      const auto& piv = v[pivot_[k]];
      if (f_.is_zero(piv)) continue;
      auto s = f_.mul(piv, pivot_inv_[k]);
      for (std::size_t i = 0; i < rows_; ++i)
        if (!f_.is_zero(echelon_[k][i])) v[i] = f_.sub(v[i], f_.mul(s, echelon_[k][i]));
      for (std::size_t i = 0; i < n_; ++i)
        if (!f_.is_zero(track_[k][i])) x[i] = f_.add(x[i], f_.mul(s, track_[k][i]));
    }
    for (std::size_t i = 0; i < rows_; ++i)
      if (!f_.is_zero(v[i]))
        fail(errc::not_invertible, "vector lies outside the column span");
    return x;
  }

private:
  void reduce_pair(std::vector<typename F::elem>& v, std::vector<typename F::elem>& t) const {
    for (std::size_t k = 0; k < echelon_.size(); ++k) {
      const auto& piv = v[pivot_[k]];
      if (f_.is_zero(piv)) continue;
      auto s = f_.mul(piv, pivot_inv_[k]);
      for (std::size_t i = 0; i < rows_; ++i)
        if (!f_.is_zero(echelon_[k][i])) v[i] = f_.sub(v[i], f_.mul(s, echelon_[k][i]));
      for (std::size_t i = 0; i < n_; ++i)
        if (!f_.is_zero(track_[k][i])) t[i] = f_.sub(t[i], f_.mul(s, track_[k][i]));
    }
  }

  F f_;
  std::size_t rows_, n_;
  std::vector<std::vector<typename F::elem>> echelon_;
  std::vector<std::vector<typename F::elem>> track_;
  std::vector<std::size_t> pivot_;
  std::vector<typename F::elem> pivot_inv_;
};

// Inverse of a square invertible matrix; NotInvertible otherwise.
template <class F>
FieldMatrix<F> field_inverse(const F& f, const FieldMatrix<F>& a) {
  if (a.rows != a.cols) fail(errc::not_invertible, "only square matrices invert");
  Solver<F> s(f, a);
  FieldMatrix<F> out(f, a.cols, a.cols);
  for (std::size_t j = 0; j < a.cols; ++j) {
    std::vector<typename F::elem> e(a.rows, f.zero());
    e[j] = f.one();
    out.col[j] = s.solve(e);
  }
  return out;
}

}  // namespace dowker
