#pragma once

#include "spinsurg/int_matrix.hpp"

namespace spinsurg {

// Smith normal form u * m * v = d with u, v unimodular and d diagonal,
// d_1 | d_2 | ... | d_r, all diagonal entries >= 0, zeros last.
// u_inv and v_inv are maintained alongside so callers get generator
// lifts (columns of u_inv) without a separate inversion.
struct SmithNormalForm {
  IntMatrix u, u_inv;
  IntMatrix d;
  IntMatrix v, v_inv;

  std::vector<mpz_class> diagonal() const;
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

}  // namespace spinsurg
