#pragma once

#include <vector>

#include "spinsurg/forms.hpp"
#include "spinsurg/gf2.hpp"
#include "spinsurg/int_matrix.hpp"

namespace spinsurg {

// Finite discriminant data of an integer symmetric form: the free rank
// of its kernel, the torsion part of its cokernel, and one integer lift
// per torsion generator (a column in the rational column space of the
// matrix).
struct PresentedTorsion {
  std::size_t free_rank = 0;
  FiniteAbelianGroup torsion;
  IntMatrix generator_lifts;  // n x rank(torsion), column j lifts gen j
};

PresentedTorsion presented_group(const SymIntMatrix& s);

// Torsion pairing of the form: gram[i][j] = c_i . z mod 1 with S z = c_j
// solved over Q.  Nondegenerate for every S.
LinkingPairing presented_pairing(const SymIntMatrix& s);

// Integer lift of a characteristic vector: f(w, x) = f(x, x) mod 2 for
// all x.  Compared mod 2 (and mod 2F where it matters).
struct WuClass {
  std::vector<mpz_class> entries;

  static WuClass from_bits(const GF2Vector& bits);
  static WuClass from_longs(const std::vector<long>& v);
  GF2Vector bits() const;
};

bool is_wu_class(const SymIntMatrix& s, const WuClass& w);

// All solutions of S w = diag(S) over GF(2); never empty.
std::vector<GF2Vector> wu_classes_mod2(const SymIntMatrix& s);

// The quadratic refinement of presented_pairing(s) induced by a Wu
// class: q(g_i) = (c_i . z_i - c_i . w) / 2 mod 1.
QuadraticForm presented_quadratic(const SymIntMatrix& s, const WuClass& w);

struct VanDerBlijReport {
  GaussBrown lhs;  // gauss_brown of the presented quadratic form
  int rhs_mod8;    // signature(S) - w^T S w, reduced mod 8
  bool equal;
};

VanDerBlijReport van_der_blij(const SymIntMatrix& s, const WuClass& w);

}  // namespace spinsurg
