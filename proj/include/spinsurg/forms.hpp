#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spinsurg/group.hpp"
#include "spinsurg/qz.hpp"

namespace spinsurg {

// Element of Z8 together with a distinguished infinity, the codomain of
// the Gauss sum logarithm: gamma = e^{2 pi i B / 8}, with B = infinity
// encoding gamma = 0.
class GaussBrown {
 public:
  GaussBrown() : finite_(true), v_(0) {}
  static GaussBrown infinite() {
    GaussBrown g;
    g.finite_ = false;
    return g;
  }
  static GaussBrown finite(long k) {
    GaussBrown g;
    g.v_ = static_cast<int>((k % 8 + 8) % 8);
    return g;
  }

  bool is_infinite() const { return !finite_; }
  int value() const;  // throws precondition_error when infinite

  // Z8 addition; infinity absorbs (gamma values multiply, 0 absorbs).
  GaussBrown operator+(const GaussBrown& o) const;
  GaussBrown operator-() const;

  std::string str() const;  // "0".."7" or "inf"
  static GaussBrown parse(const std::string& s);

  bool operator==(const GaussBrown&) const = default;

 private:
  bool finite_;
  int v_ = 0;
};

std::ostream& operator<<(std::ostream& os, const GaussBrown& g);

// Symmetric bilinear pairing G x G -> Q/Z stored by generator values.
// Nondegeneracy is a property checked by operations, not an invariant:
// degenerate pairings occur as associated pairings of degenerate forms.
class LinkingPairing {
 public:
  LinkingPairing() = default;  // empty pairing on the trivial group
  LinkingPairing(FiniteAbelianGroup group, std::vector<std::vector<QZ>> gram);

  const FiniteAbelianGroup& group() const { return g_; }
  const std::vector<std::vector<QZ>>& gram() const { return gram_; }
  const QZ& gram_at(std::size_t i, std::size_t j) const {
    return gram_[i][j];
  }

  bool operator==(const LinkingPairing&) const = default;

 private:
  FiniteAbelianGroup g_;
  std::vector<std::vector<QZ>> gram_;
};

// Quadratic form q: G -> Q/Z with associated bilinear pairing
// b(x,y) = q(x+y) - q(x) - q(y), stored by generator values.
class QuadraticForm {
 public:
  QuadraticForm() = default;  // trivial form on the trivial group
  QuadraticForm(FiniteAbelianGroup group, std::vector<QZ> qgen,
                std::vector<std::vector<QZ>> gram);
  QuadraticForm(std::vector<QZ> qgen, LinkingPairing pairing);

  const FiniteAbelianGroup& group() const { return b_.group(); }
  const std::vector<QZ>& qgen() const { return qgen_; }
  const LinkingPairing& pairing() const { return b_; }

  bool operator==(const QuadraticForm&) const = default;

 private:
  std::vector<QZ> qgen_;
  LinkingPairing b_;
};

QZ eval_pairing(const LinkingPairing& b, const GroupElement& x,
                const GroupElement& y);
QZ eval_quadratic(const QuadraticForm& q, const GroupElement& x);

const LinkingPairing& associated_pairing(const QuadraticForm& q);

// Generators of {x : b(x, y) = 0 for all y}; empty list for a
// nondegenerate pairing.
std::vector<GroupElement> pairing_kernel(const LinkingPairing& b);
bool is_nondegenerate(const LinkingPairing& b);
std::uint64_t pairing_kernel_order(const LinkingPairing& b);

// Gauss sum logarithm: gamma(G,q) = |ker b_q|^{-1/2} |G|^{-1/2}
// sum_x e^{2 pi i q(x)}.  The fast path compiles the form to machine
// integers and accumulates a histogram of values (OpenMP-parallel when
// enabled); the reference path sums exact rationals serially.  Both
// snap the resulting unit (or zero) complex number to Z8 + {inf}.
GaussBrown gauss_brown(const QuadraticForm& q);
GaussBrown gauss_brown_reference(const QuadraticForm& q);

// Order of the 2-torsion subgroup T2(G) = {x : 2x = 0}.
mpz_class t2_subgroup_order(const FiniteAbelianGroup& g);

// The affine action of T2(G) on refinements of a fixed pairing:
// (x.q)(y) = q(y) + b(x, y).
QuadraticForm t2_action(const GroupElement& x, const QuadraticForm& q);

// All quadratic refinements of b, |T2(G)| of them, deterministic order.
std::vector<QuadraticForm> quad_refinements(const LinkingPairing& b);

std::vector<std::pair<mpz_class, LinkingPairing>> p_primary_decomposition(
    const LinkingPairing& b);
std::vector<std::pair<mpz_class, QuadraticForm>> p_primary_decomposition(
    const QuadraticForm& q);

// Orthogonal sum, re-expressed on the invariant-factor form of the
// product group (generators recombined prime by prime).
LinkingPairing direct_sum(const LinkingPairing& a, const LinkingPairing& b);
QuadraticForm direct_sum(const QuadraticForm& a, const QuadraticForm& b);

}  // namespace spinsurg
