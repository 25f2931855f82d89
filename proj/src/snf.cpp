#include "spinsurg/snf.hpp"

#include <cstdlib>

#include "spinsurg/errors.hpp"

namespace spinsurg {

namespace {

// Elementary operations applied to d with the unimodular bookkeeping
// kept in sync: u * m * v == d and u_inv, v_inv stay exact inverses.
struct Reduction {
  IntMatrix d, u, u_inv, v, v_inv;

  explicit Reduction(const IntMatrix& m)
      : d(m),
        u(IntMatrix::identity(m.rows())),
        u_inv(IntMatrix::identity(m.rows())),
        v(IntMatrix::identity(m.cols())),
        v_inv(IntMatrix::identity(m.cols())) {}

  void rswap(std::size_t i, std::size_t j) {
    d.swap_rows(i, j);
    u.swap_rows(i, j);
    u_inv.swap_cols(i, j);
  }
  void rneg(std::size_t i) {
    d.negate_row(i);
    u.negate_row(i);
    u_inv.negate_col(i);
  }
  void radd(std::size_t i, std::size_t j, const mpz_class& q) {
    d.add_row(i, j, q);
    u.add_row(i, j, q);
    u_inv.add_col(j, i, -q);
  }
  void cswap(std::size_t i, std::size_t j) {
    d.swap_cols(i, j);
    v.swap_cols(i, j);
    v_inv.swap_rows(i, j);
  }
  void cadd(std::size_t i, std::size_t j, const mpz_class& q) {
    d.add_col(i, j, q);
    v.add_col(i, j, q);
    v_inv.add_row(j, i, -q);
  }

  // Smallest nonzero |entry| in the block with corner (t, t), or false.
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    mpz_class best;
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j) {
        if (d.at(i, j) == 0) continue;
        mpz_class a = abs(d.at(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    return found;
  }
};

}  // namespace

std::vector<mpz_class> SmithNormalForm::diagonal() const {
  const std::size_t r = std::min(d.rows(), d.cols());
  std::vector<mpz_class> out(r);
  for (std::size_t i = 0; i < r; ++i) out[i] = d.at(i, i);
  return out;
}

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  Reduction red(m);
  const std::size_t r = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < r; ++t) {
    std::size_t pi = t, pj = t;
    if (!red.find_pivot(t, pi, pj)) break;
    red.rswap(t, pi);
    red.cswap(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < red.d.rows(); ++i) {
        if (red.d.at(i, t) == 0) continue;
        mpz_class q = red.d.at(i, t) / red.d.at(t, t);
        if (q != 0) red.radd(i, t, -q);
        if (red.d.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < red.d.cols(); ++j) {
        if (red.d.at(t, j) == 0) continue;
        mpz_class q = red.d.at(t, j) / red.d.at(t, t);
        if (q != 0) red.cadd(j, t, -q);
        if (red.d.at(t, j) != 0) clean = false;
      }
      if (!clean) {
        // Remainders are strictly smaller than the pivot; re-pick.
        red.find_pivot(t, pi, pj);
        red.rswap(t, pi);
        red.cswap(t, pj);
        continue;
      }
      // Pivot is alone in its row and column; enforce divisibility of
      // the remaining block by folding an offending row into row t.
      bool divides = true;
      for (std::size_t i = t + 1; i < red.d.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < red.d.cols() && divides; ++j)
          if (red.d.at(i, j) % red.d.at(t, t) != 0) {
            red.radd(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
  }

  for (std::size_t t = 0; t < r; ++t)
    if (red.d.at(t, t) < 0) red.rneg(t);

  SmithNormalForm out;
  out.u = std::move(red.u);
  out.u_inv = std::move(red.u_inv);
  out.d = std::move(red.d);
  out.v = std::move(red.v);
  out.v_inv = std::move(red.v_inv);
  return out;
}

}  // namespace spinsurg
