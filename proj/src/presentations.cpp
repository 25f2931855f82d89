#include "spinsurg/presentations.hpp"

#include "spinsurg/linalg.hpp"
#include "spinsurg/snf.hpp"

namespace spinsurg {

namespace {

// SNF-derived data shared by the presentation operations.
struct Discriminant {
  PresentedTorsion pres;
  std::vector<std::size_t> torsion_cols;  // SNF diagonal indices kept
  std::vector<mpz_class> torsion_d;
  IntMatrix w_num;  // (U^-1)^T V; gram[i][j] = w_num[i][j] / d_j mod 1
};

Discriminant discriminant_data(const SymIntMatrix& s) {
  const std::size_t n = s.dim();
  const SmithNormalForm snf = smith_normal_form(s.mat());
  const auto diag = snf.diagonal();

  Discriminant out;
  std::vector<mpz_class> factors;
  for (std::size_t j = 0; j < diag.size(); ++j) {
    if (diag[j] == 0) {
      ++out.pres.free_rank;
    } else if (diag[j] != 1) {
      out.torsion_cols.push_back(j);
      factors.push_back(diag[j]);
    }
  }
  out.torsion_d = factors;
  out.pres.torsion = FiniteAbelianGroup(std::move(factors));

  const std::size_t t = out.torsion_cols.size();
  out.pres.generator_lifts = IntMatrix(n, t);
  for (std::size_t k = 0; k < t; ++k)
    for (std::size_t i = 0; i < n; ++i)
      out.pres.generator_lifts.at(i, k) = snf.u_inv.at(i, out.torsion_cols[k]);

  const IntMatrix w_full = snf.u_inv.transposed() * snf.v;
  out.w_num = IntMatrix(t, t);
  for (std::size_t a = 0; a < t; ++a)
    for (std::size_t b = 0; b < t; ++b)
      out.w_num.at(a, b) = w_full.at(out.torsion_cols[a], out.torsion_cols[b]);
  return out;
}

LinkingPairing pairing_from(const Discriminant& dd) {
  const std::size_t t = dd.torsion_d.size();
  std::vector<std::vector<QZ>> gram(t, std::vector<QZ>(t));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      gram[i][j] = QZ(dd.w_num.at(i, j), dd.torsion_d[j]);
  return LinkingPairing(dd.pres.torsion, std::move(gram));
}

}  // namespace

PresentedTorsion presented_group(const SymIntMatrix& s) {
  return discriminant_data(s).pres;
}

LinkingPairing presented_pairing(const SymIntMatrix& s) {
  return pairing_from(discriminant_data(s));
}

WuClass WuClass::from_bits(const GF2Vector& bits) {
  WuClass w;
  w.entries.assign(bits.begin(), bits.end());
  return w;
}

WuClass WuClass::from_longs(const std::vector<long>& v) {
  WuClass w;
  w.entries.assign(v.begin(), v.end());
  return w;
}

GF2Vector WuClass::bits() const {
  GF2Vector b(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    b[i] = mpz_odd_p(entries[i].get_mpz_t()) ? 1 : 0;
  return b;
}

bool is_wu_class(const SymIntMatrix& s, const WuClass& w) {
  if (w.entries.size() != s.dim()) return false;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    mpz_class acc = 0;
    for (std::size_t j = 0; j < s.dim(); ++j) acc += s.at(i, j) * w.entries[j];
    if ((acc - s.at(i, i)) % 2 != 0) return false;
  }
  return true;
}

std::vector<GF2Vector> wu_classes_mod2(const SymIntMatrix& s) {
  const std::size_t n = s.dim();
  GF2Matrix a(n, n);
  GF2Vector rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] = mpz_odd_p(s.at(i, i).get_mpz_t()) ? 1 : 0;
    for (std::size_t j = 0; j < n; ++j)
      a.at(i, j) = mpz_odd_p(s.at(i, j).get_mpz_t()) ? 1 : 0;
  }
  const auto sol = solve_gf2_affine(a, rhs);
  if (!sol.solvable)
    throw internal_error(
        "wu_classes_mod2: diagonal not in GF(2) column space");
  return sol.enumerate();
}

QuadraticForm presented_quadratic(const SymIntMatrix& s, const WuClass& w) {
  if (!is_wu_class(s, w))
    throw precondition_error(
        "presented_quadratic: vector fails the Wu/characteristic condition");
  const Discriminant dd = discriminant_data(s);
  LinkingPairing pairing = pairing_from(dd);

  const std::size_t t = dd.torsion_d.size();
  std::vector<QZ> qgen(t);
  for (std::size_t i = 0; i < t; ++i) {
    mpz_class cw = 0;  // c_i . w
    for (std::size_t r = 0; r < s.dim(); ++r)
      cw += dd.pres.generator_lifts.at(r, i) * w.entries[r];
    qgen[i] = QZ(dd.w_num.at(i, i) - cw * dd.torsion_d[i],
                 2 * dd.torsion_d[i]);
  }
  return QuadraticForm(std::move(qgen), std::move(pairing));
}

VanDerBlijReport van_der_blij(const SymIntMatrix& s, const WuClass& w) {
  VanDerBlijReport rep;
  rep.lhs = gauss_brown(presented_quadratic(s, w));
  mpz_class wsw = 0;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      wsw += w.entries[i] * s.at(i, j) * w.entries[j];
  mpz_class rhs = signature(s) - wsw;
  mpz_fdiv_r_ui(rhs.get_mpz_t(), rhs.get_mpz_t(), 8);
  rep.rhs_mod8 = static_cast<int>(rhs.get_si());
  rep.equal = !rep.lhs.is_infinite() && rep.lhs.value() == rep.rhs_mod8;
  return rep;
}

}  // namespace spinsurg
