#include "spinsurg/surgery.hpp"

#include <utility>

#include "spinsurg/classification.hpp"
#include "spinsurg/errors.hpp"
#include "spinsurg/linalg.hpp"

namespace spinsurg {

namespace {

bool is_characteristic(const SymIntMatrix& b, const GF2Vector& s) {
  if (s.size() != b.dim()) return false;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    mpz_class acc = -b.at(i, i);
    for (std::size_t j = 0; j < b.dim(); ++j)
      if (s[j]) acc += b.at(i, j);
    if (mpz_odd_p(acc.get_mpz_t())) return false;
  }
  return true;
}

WuClass wu_of(const SpinPresentation& p) {
  return WuClass::from_bits(p.spin());
}

}  // namespace

SpinPresentation::SpinPresentation(SymIntMatrix matrix, GF2Vector spin)
    : b_(std::move(matrix)), s_(std::move(spin)) {
  if (s_.size() != b_.dim())
    throw precondition_error("spin vector length must match the matrix");
  for (const auto bit : s_)
    if (bit > 1) throw precondition_error("spin entries must be 0 or 1");
  if (!is_characteristic(b_, s_))
    throw precondition_error("spin vector is not a characteristic solution");
}

std::vector<GF2Vector> spin_structures(const SymIntMatrix& b) {
  return wu_classes_mod2(b);
}

ManifoldInvariants manifold_invariants(const SymIntMatrix& b) {
  ManifoldInvariants out;
  out.betti1 = kernel_rank(b);
  out.pairing = presented_pairing(b.negated());
  return out;
}

SpinInvariants spin_invariants(const SpinPresentation& p) {
  const auto& b = p.matrix();
  const WuClass w = wu_of(p);
  SpinInvariants out;
  out.betti1 = kernel_rank(b);
  out.phi = presented_quadratic(b.negated(), w);
  mpz_class wsw = 0;
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      wsw += w.entries[i] * b.at(i, j) * w.entries[j];
  mpz_class r = signature(b) - wsw;
  mpz_fdiv_r_ui(r.get_mpz_t(), r.get_mpz_t(), 8);
  out.rochlin_mod8 = static_cast<int>(r.get_si());
  try {
    if (gauss_brown(out.phi) != GaussBrown::finite(-out.rochlin_mod8))
      throw internal_error(
          "gauss sum of the spin form disagrees with the Rochlin residue");
  } catch (const size_cap_error&) {
    // Torsion too large to enumerate; the closed formula stands alone.
  }
  return out;
}

SpinPresentation y_surgery(const SpinPresentation& p,
                           const std::vector<mpz_class>& leaf_linkings,
                           const mpz_class& leaf_framing) {
  const std::size_t n = p.dim();
  if (leaf_linkings.size() != n)
    throw precondition_error("leaf linking vector length must match");
  IntMatrix m(n + 2, n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = p.matrix().at(i, j);
    m.at(i, n) = leaf_linkings[i];
    m.at(n, i) = leaf_linkings[i];
  }
  m.at(n, n) = leaf_framing;
  m.at(n, n + 1) = 1;
  m.at(n + 1, n) = 1;

  GF2Vector s = p.spin();
  mpz_class last = leaf_framing;
  for (std::size_t i = 0; i < n; ++i)
    if (s[i]) last += leaf_linkings[i];
  s.push_back(0);
  s.push_back(mpz_odd_p(last.get_mpz_t()) ? 1 : 0);
  return SpinPresentation(SymIntMatrix(std::move(m)), std::move(s));
}

SpinPresentation blow_up(const SpinPresentation& p, int sign) {
  if (sign != 1 && sign != -1)
    throw precondition_error("blow-up framing must be +1 or -1");
  const auto m = p.matrix().direct_sum(SymIntMatrix::diagonal({sign}));
  GF2Vector s = p.spin();
  s.push_back(1);
  return SpinPresentation(m, std::move(s));
}

SpinPresentation blow_down(const SpinPresentation& p, std::size_t index) {
  const std::size_t n = p.dim();
  if (index >= n) throw precondition_error("blow-down index out of range");
  const auto& b = p.matrix();
  if (!(b.at(index, index) == 1 || b.at(index, index) == -1))
    throw precondition_error("blow-down requires a +-1 framed component");
  for (std::size_t j = 0; j < n; ++j)
    if (j != index && b.at(index, j) != 0)
      throw precondition_error("blow-down component must link nothing else");
  if (p.spin()[index] != 1)
    throw precondition_error("blow-down requires spin bit 1");
  IntMatrix m(n - 1, n - 1);
  GF2Vector s;
  for (std::size_t i = 0, ii = 0; i < n; ++i) {
    if (i == index) continue;
    for (std::size_t j = 0, jj = 0; j < n; ++j) {
      if (j == index) continue;
      m.at(ii, jj) = b.at(i, j);
      ++jj;
    }
    s.push_back(p.spin()[i]);
    ++ii;
  }
  return SpinPresentation(SymIntMatrix(std::move(m)), std::move(s));
}

SpinPresentation handle_slide(const SpinPresentation& p, std::size_t i,
                              std::size_t j, int sign) {
  const std::size_t n = p.dim();
  if (i >= n || j >= n) throw precondition_error("slide index out of range");
  if (i == j) throw precondition_error("cannot slide a component over itself");
  if (sign != 1 && sign != -1)
    throw precondition_error("slide sign must be +1 or -1");
  IntMatrix t = IntMatrix::identity(n);
  t.at(i, j) = sign;
  const auto m = congruent_transform(p.matrix(), t);
  GF2Vector s = p.spin();
  s[i] = s[i] ^ s[j];  // S^{-1} subtracts sign * e_i e_j^T
  return SpinPresentation(m, std::move(s));
}

SymIntMatrix hopf_matrix() {
  return SymIntMatrix::from_rows({{0, 1}, {1, 0}});
}

SymIntMatrix gamma8_matrix() {
  return SymIntMatrix::from_rows({
      {2, 1, 0, 0, 0, 0, 0, 0},
      {1, 2, 1, 0, 0, 0, 0, 0},
      {0, 1, 2, 1, 0, 0, 0, 0},
      {0, 0, 1, 2, 1, 0, 0, 0},
      {0, 0, 0, 1, 2, 1, 0, 1},
      {0, 0, 0, 0, 1, 2, 1, 0},
      {0, 0, 0, 0, 0, 1, 2, 0},
      {0, 0, 0, 0, 1, 0, 0, 2},
  });
}

SpinPresentation stabilize_H(const SpinPresentation& p) {
  GF2Vector s = p.spin();
  s.push_back(0);
  s.push_back(0);
  return SpinPresentation(p.matrix().direct_sum(hopf_matrix()), std::move(s));
}

SpinPresentation stabilize_Gamma8(const SpinPresentation& p) {
  GF2Vector s = p.spin();
  s.resize(s.size() + 8, 0);
  return SpinPresentation(p.matrix().direct_sum(gamma8_matrix()),
                          std::move(s));
}

bool ys_equivalent(const SpinPresentation& a, const SpinPresentation& b) {
  const auto ia = spin_invariants(a);
  const auto ib = spin_invariants(b);
  if (ia.betti1 != ib.betti1) return false;
  const bool by_form = quadratic_iso(ia.phi, ib.phi);
  const bool by_pairing =
      pairing_iso(ia.phi.pairing(), ib.phi.pairing()) &&
      ia.rochlin_mod8 == ib.rochlin_mod8;
  if (by_form != by_pairing)
    throw internal_error(
        "spin-form and pairing+Rochlin criteria disagree");
  return by_form;
}

bool y_equivalent(const SymIntMatrix& a, const SymIntMatrix& b) {
  const auto ia = manifold_invariants(a);
  const auto ib = manifold_invariants(b);
  return ia.betti1 == ib.betti1 && pairing_iso(ia.pairing, ib.pairing);
}

bool stably_equivalent_even(const SymIntMatrix& a, const SymIntMatrix& b) {
  if (!a.is_even() || !b.is_even())
    throw precondition_error("stable equivalence is defined for even forms");
  if (kernel_rank(a) != kernel_rank(b)) return false;
  const WuClass za{std::vector<mpz_class>(a.dim(), 0)};
  const WuClass zb{std::vector<mpz_class>(b.dim(), 0)};
  return quadratic_iso(presented_quadratic(a, za), presented_quadratic(b, zb));
}

}  // namespace spinsurg
