#pragma once

#include <cstddef>
#include <vector>

#include "spinsurg/forms.hpp"
#include "spinsurg/gf2.hpp"
#include "spinsurg/int_matrix.hpp"
#include "spinsurg/presentations.hpp"

namespace spinsurg {

// Surgery presentation of a closed oriented 3-manifold together with a
// spin structure: the linking matrix of a framed link and one
// characteristic solution s of B s = diag(B) over GF(2).  Construction
// validates the characteristic condition.
class SpinPresentation {
 public:
  SpinPresentation() = default;  // the 3-sphere with its unique spin
  SpinPresentation(SymIntMatrix matrix, GF2Vector spin);

  const SymIntMatrix& matrix() const { return b_; }
  const GF2Vector& spin() const { return s_; }
  std::size_t dim() const { return b_.dim(); }

  bool operator==(const SpinPresentation&) const = default;

 private:
  SymIntMatrix b_;
  GF2Vector s_;
};

// All characteristic solutions of B s = diag(B) mod 2; their count is
// 2^(nullity of B mod 2) = |H^1(M; Z2)|, and the set is never empty.
std::vector<GF2Vector> spin_structures(const SymIntMatrix& b);

struct ManifoldInvariants {
  std::size_t betti1 = 0;
  LinkingPairing pairing;  // torsion linking form, presented by -B
};

ManifoldInvariants manifold_invariants(const SymIntMatrix& b);

struct SpinInvariants {
  std::size_t betti1 = 0;
  QuadraticForm phi;    // spin refinement of the linking form
  int rochlin_mod8 = 0; // = signature(B) - w^T B w mod 8
};

// Also asserts gauss_brown(phi) = -rochlin_mod8 whenever the torsion
// group is small enough to enumerate.
SpinInvariants spin_invariants(const SpinPresentation& p);

// Border extension by a two-component block: framings [[x,1],[1,0]],
// first new component linking the old ones by leaf_linkings, second new
// component linking nothing else.  The spin bits extend by
// (0, x + sum x_i s_i).
SpinPresentation y_surgery(const SpinPresentation& p,
                           const std::vector<mpz_class>& leaf_linkings,
                           const mpz_class& leaf_framing);

// Stabilization by a (+-1)-framed unknot, spin bit 1; blow_down removes
// such a component (its row must meet nothing else).
SpinPresentation blow_up(const SpinPresentation& p, int sign);
SpinPresentation blow_down(const SpinPresentation& p, std::size_t index);

// Slide component i over component j: congruence by S = I + sign E_ij,
// spin transported by S^{-1} (bit i gains bit j).
SpinPresentation handle_slide(const SpinPresentation& p, std::size_t i,
                              std::size_t j, int sign);

SymIntMatrix hopf_matrix();    // [[0,1],[1,0]]
SymIntMatrix gamma8_matrix();  // even unimodular, signature 8

SpinPresentation stabilize_H(const SpinPresentation& p);
SpinPresentation stabilize_Gamma8(const SpinPresentation& p);

// Spin equivalence under Y-moves: first Betti numbers equal and the
// spin quadratic forms isomorphic.  Internally cross-checked against
// the equivalent criterion (pairings isomorphic and Rochlin equal).
bool ys_equivalent(const SpinPresentation& a, const SpinPresentation& b);

// Unspun equivalence under Y-moves: first Betti numbers equal and the
// torsion linking pairings isomorphic.
bool y_equivalent(const SymIntMatrix& a, const SymIntMatrix& b);

// Even forms up to stabilization (hyperbolic and signature-8 blocks):
// kernel ranks equal and the discriminant quadratic forms isomorphic.
bool stably_equivalent_even(const SymIntMatrix& a, const SymIntMatrix& b);

}  // namespace spinsurg
