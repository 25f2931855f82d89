#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace spinsurg {

// Dense integer matrix with arbitrary-precision entries.  0x0 is valid
// and represents the empty matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator-() const;
  IntMatrix transposed() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  // row_i += q * row_j, col_i += q * col_j
  void add_row(std::size_t i, std::size_t j, const mpz_class& q);
  void add_col(std::size_t i, std::size_t j, const mpz_class& q);

  IntMatrix column(std::size_t j) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> a_;
};

// Exact determinant (fraction-free Bareiss elimination).
mpz_class determinant(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

// Inverse of a unimodular integer matrix; throws precondition_error if
// m is not square with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Symmetric square integer matrix: the linking matrix of a framed link,
// the Gram matrix of a bilinear lattice form, etc.  Value type; the
// symmetry invariant is checked on construction.
class SymIntMatrix {
 public:
  SymIntMatrix() = default;  // 0x0: the empty surgery presentation
  explicit SymIntMatrix(IntMatrix m);

  static SymIntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static SymIntMatrix diagonal(const std::vector<long>& d);
  static SymIntMatrix zeros(std::size_t n);

  std::size_t dim() const { return m_.rows(); }
  const mpz_class& at(std::size_t i, std::size_t j) const { return m_.at(i, j); }
  const IntMatrix& mat() const { return m_; }

  // True iff every diagonal entry is even (the form x^T M x takes even
  // values on integer vectors).
  bool is_even() const;

  SymIntMatrix direct_sum(const SymIntMatrix& o) const;
  SymIntMatrix negated() const { return SymIntMatrix(-m_); }

  bool operator==(const SymIntMatrix&) const = default;

 private:
  IntMatrix m_;
};

// p^T * s * p for unimodular p; throws precondition_error otherwise.
SymIntMatrix congruent_transform(const SymIntMatrix& s, const IntMatrix& p);

std::ostream& operator<<(std::ostream& os, const SymIntMatrix& m);

}  // namespace spinsurg
