#include "spinsurg/int_matrix.hpp"

#include <ostream>
#include <utility>

#include "spinsurg/errors.hpp"
#include "spinsurg/snf.hpp"

namespace spinsurg {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw precondition_error("IntMatrix: ragged row list");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_)
    throw precondition_error("IntMatrix: dimension mismatch in product");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const mpz_class& q) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) += q * at(j, k);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const mpz_class& q) {
  for (std::size_t k = 0; k < rows_; ++k) at(k, i) += q * at(k, j);
}

IntMatrix IntMatrix::column(std::size_t j) const {
  IntMatrix r(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
  return r;
}

mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw precondition_error("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; divisions below are exact.
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  const mpz_class d = determinant(m);
  return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!is_unimodular(m))
    throw precondition_error("unimodular_inverse: matrix is not unimodular");
  // u * m * v = identity, so m^-1 = v * u.
  const SmithNormalForm snf = smith_normal_form(m);
  return snf.v * snf.u;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " [");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << m.at(i, j) << (j + 1 < m.cols() ? ", " : "");
    os << "]" << (i + 1 < m.rows() ? "\n" : "");
  }
  return os << "]";
}

SymIntMatrix::SymIntMatrix(IntMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols())
    throw precondition_error("SymIntMatrix: matrix not square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (m_.at(i, j) != m_.at(j, i))
        throw precondition_error("SymIntMatrix: matrix not symmetric");
}

SymIntMatrix SymIntMatrix::from_rows(
    const std::vector<std::vector<long>>& rows) {
  return SymIntMatrix(IntMatrix::from_rows(rows));
}

SymIntMatrix SymIntMatrix::diagonal(const std::vector<long>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return SymIntMatrix(std::move(m));
}

SymIntMatrix SymIntMatrix::zeros(std::size_t n) {
  return SymIntMatrix(IntMatrix(n, n));
}

bool SymIntMatrix::is_even() const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (at(i, i) % 2 != 0) return false;
  return true;
}

SymIntMatrix SymIntMatrix::direct_sum(const SymIntMatrix& o) const {
  const std::size_t n = dim(), m = o.dim();
  IntMatrix r(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) r.at(n + i, n + j) = o.at(i, j);
  return SymIntMatrix(std::move(r));
}

SymIntMatrix congruent_transform(const SymIntMatrix& s, const IntMatrix& p) {
  if (p.rows() != s.dim() || p.cols() != s.dim())
    throw precondition_error("congruent_transform: dimension mismatch");
  if (!is_unimodular(p))
    throw precondition_error("congruent_transform: basis change not unimodular");
  return SymIntMatrix(p.transposed() * s.mat() * p);
}

std::ostream& operator<<(std::ostream& os, const SymIntMatrix& m) {
  return os << m.mat();
}

}  // namespace spinsurg
