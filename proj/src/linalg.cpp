#include "spinsurg/linalg.hpp"

#include <vector>

#include "spinsurg/snf.hpp"

namespace spinsurg {

namespace {

// Symmetric row+column elimination over Q.
struct RationalSym {
  std::size_t n;
  std::vector<mpq_class> a;

  explicit RationalSym(const SymIntMatrix& s) : n(s.dim()), a(n * n) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i * n + j] = s.at(i, j);
  }

  mpq_class& at(std::size_t i, std::size_t j) { return a[i * n + j]; }

  void swap_sym(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(at(i, k), at(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(at(k, i), at(k, j));
  }

  // row_i += f * row_j and col_i += f * col_j
  void add_sym(std::size_t i, std::size_t j, const mpq_class& f) {
    for (std::size_t k = 0; k < n; ++k) at(i, k) += f * at(j, k);
    for (std::size_t k = 0; k < n; ++k) at(k, i) += f * at(k, j);
  }
};

}  // namespace

int signature(const SymIntMatrix& s) {
  RationalSym m(s);
  const std::size_t n = m.n;
  int pos = 0, neg = 0;
  std::size_t k = 0;
  while (k < n) {
    // Prefer a nonzero diagonal pivot.
    std::size_t p = k;
    while (p < n && m.at(p, p) == 0) ++p;
    if (p < n) {
      m.swap_sym(k, p);
      const mpq_class d = m.at(k, k);
      if (d > 0)
        ++pos;
      else
        ++neg;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m.at(i, k) == 0) continue;
        m.add_sym(i, k, -m.at(i, k) / d);
      }
      ++k;
      continue;
    }
    // All remaining diagonal entries vanish: find an off-diagonal entry
    // and split off a hyperbolic plane, which contributes (+1, -1).
    std::size_t hi = 0, hj = 0;
    bool found = false;
    for (std::size_t i = k; i < n && !found; ++i)
      for (std::size_t j = i + 1; j < n && !found; ++j)
        if (m.at(i, j) != 0) {
          hi = i;
          hj = j;
          found = true;
        }
    if (!found) break;  // remaining block is zero
    m.swap_sym(k, hi);
    m.swap_sym(k + 1, hj);
    const mpq_class c = m.at(k, k + 1);
    for (std::size_t i = k + 2; i < n; ++i) {
      if (m.at(i, k) != 0) m.add_sym(i, k + 1, -m.at(i, k) / c);
      if (m.at(i, k + 1) != 0) m.add_sym(i, k, -m.at(i, k + 1) / c);
    }
    ++pos;
    ++neg;
    k += 2;
  }
  return pos - neg;
}

std::size_t kernel_rank(const SymIntMatrix& s) {
  const auto diag = smith_normal_form(s.mat()).diagonal();
  std::size_t zeros = 0;
  for (const auto& d : diag)
    if (d == 0) ++zeros;
  return zeros;
}

}  // namespace spinsurg
