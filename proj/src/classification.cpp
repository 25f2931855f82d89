#include "spinsurg/classification.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "spinsurg/compiled.hpp"
#include "spinsurg/errors.hpp"

namespace spinsurg {

std::string KKInvariants::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (k > 0) os << " ";
    os << (k + 1) << ":(" << levels[k].rank << "," << levels[k].sigma.str()
       << ")";
  }
  return os.str();
}

namespace {

// Exponent e with d = 2^e; precondition_error if d is not a 2-power.
unsigned two_exponent(const mpz_class& d) {
  if (mpz_popcount(d.get_mpz_t()) != 1)
    throw precondition_error("group is not a 2-group");
  return static_cast<unsigned>(mpz_scan1(d.get_mpz_t(), 0));
}

// Argument of sum_x e^{2 pi i 2^{k-1} b(x,x)} as an element of
// Z8 + {inf}.  The summand expands over coordinates exactly like a
// quadratic form with q(g_i) = 2^{k-1} b_ii and pairing 2^k b, so the
// histogram kernel is reused; the modulus of the sum is either 0 or
// sqrt(|G| * |radical|) >= 1, a gap doubles resolve comfortably.
GaussBrown sigma_level(const detail::CompiledPairing& cb, unsigned k) {
  detail::CompiledQuadratic cq;
  cq.b = cb;
  const std::uint64_t denom = cb.denom;
  const std::uint64_t half = (std::uint64_t{1} << (k - 1)) % denom;
  const std::size_t n = cb.g.rank();
  for (std::size_t i = 0; i < n; ++i) {
    cq.qgen.push_back(
        static_cast<std::uint32_t>(cb.gram_at(i, i) * half % denom));
    for (std::size_t j = 0; j < n; ++j)
      cq.b.gram[i * n + j] =
          static_cast<std::uint32_t>(cb.gram_at(i, j) * (2 * half) % denom);
  }
  const auto counts = detail::value_histogram(cq);
  double re = 0, im = 0;
  const double tau = 2.0 * std::numbers::pi;
  for (std::uint32_t v = 0; v < cb.denom; ++v) {
    if (counts[v] == 0) continue;
    const double theta = tau * v / cb.denom;
    re += static_cast<double>(counts[v]) * std::cos(theta);
    im += static_cast<double>(counts[v]) * std::sin(theta);
  }
  const double mod = std::hypot(re, im);
  if (mod < 0.5) return GaussBrown::infinite();
  return detail::snap_unit_complex(re / mod, im / mod);
}

}  // namespace

KKInvariants kk_invariants(const LinkingPairing& b) {
  const auto& factors = b.group().factors();
  unsigned max_e = 0;
  std::vector<unsigned> exps;
  for (const auto& d : factors) {
    exps.push_back(two_exponent(d));
    max_e = std::max(max_e, exps.back());
  }
  if (!is_nondegenerate(b))
    throw precondition_error("pairing invariants require nondegeneracy");
  KKInvariants out;
  if (max_e == 0) return out;
  const auto cb = detail::compile_pairing(b);
  for (unsigned k = 1; k <= max_e; ++k) {
    KKLevel level;
    for (unsigned e : exps)
      if (e == k) ++level.rank;
    level.sigma = sigma_level(cb, k);
    out.levels.push_back(level);
  }
  return out;
}

QuadraticForm wall_psi(const LinkingPairing& b_special) {
  const auto& factors = b_special.group().factors();
  for (const auto& d : factors)
    if (two_exponent(d) < 2)
      throw precondition_error(
          "special pairing cannot have an order-2 summand");
  if (!is_nondegenerate(b_special))
    throw precondition_error("special pairing must be nondegenerate");
  const std::size_t n = factors.size();
  // Representative independence of q(x) = b'(x', x') modulo the
  // 2-torsion of the lifts, checked on generator pairs.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const mpz_class t = (factors[i] / 2) * (factors[j] / 2);
      if (!b_special.gram_at(i, j).times(t).is_zero())
        throw internal_error("induced form is not lift-independent");
    }
  std::vector<mpz_class> half;
  for (const auto& d : factors) half.push_back(d / 2);
  FiniteAbelianGroup quotient(half);
  std::vector<QZ> qgen;
  std::vector<std::vector<QZ>> gram(n, std::vector<QZ>(n));
  for (std::size_t i = 0; i < n; ++i) {
    qgen.push_back(b_special.gram_at(i, i));
    for (std::size_t j = 0; j < n; ++j)
      gram[i][j] = b_special.gram_at(i, j) + b_special.gram_at(i, j);
  }
  return QuadraticForm(std::move(quotient), std::move(qgen), std::move(gram));
}

bool pairing_iso(const LinkingPairing& a, const LinkingPairing& b,
                 const IsoOptions& opts) {
  if (!is_nondegenerate(a) || !is_nondegenerate(b))
    throw precondition_error("pairing classification requires nondegeneracy");
  if (a.group().factors() != b.group().factors()) return false;
  const auto pa = p_primary_decomposition(a);
  const auto pb = p_primary_decomposition(b);
  if (pa.size() != pb.size()) throw internal_error("primary split mismatch");
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (pa[i].first != pb[i].first)
      throw internal_error("primary split mismatch");
    if (pa[i].first == 2) {
      if (kk_invariants(pa[i].second) != kk_invariants(pb[i].second))
        return false;
    } else {
      if (!brute_force_iso(pa[i].second, pb[i].second, opts).found)
        return false;
    }
  }
  return true;
}

bool quadratic_iso(const QuadraticForm& a, const QuadraticForm& b,
                   const IsoOptions& opts) {
  if (!is_nondegenerate(a.pairing()) || !is_nondegenerate(b.pairing()))
    throw precondition_error(
        "quadratic classification requires a nondegenerate pairing");
  if (a.group().factors() != b.group().factors()) return false;
  if (gauss_brown(a) != gauss_brown(b)) return false;
  return pairing_iso(a.pairing(), b.pairing(), opts);
}

std::vector<FiniteAbelianGroup> abelian_groups_up_to(std::uint64_t max_order) {
  // Invariant-factor chains d1 | d2 | ... | dn with product <= max_order,
  // depth-first: each extension appends a multiple of the last factor.
  std::vector<FiniteAbelianGroup> out;
  std::vector<mpz_class> chain;
  const mpz_class bound = mpz_class(static_cast<unsigned long>(max_order));
  auto rec = [&](auto&& self, const mpz_class& product) -> void {
    out.emplace_back(chain);
    const mpz_class step = chain.empty() ? mpz_class(1) : chain.back();
    const mpz_class start = chain.empty() ? mpz_class(2) : chain.back();
    for (mpz_class d = start; product * d <= bound; d += step) {
      chain.push_back(d);
      self(self, product * d);
      chain.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<LinkingPairing> enumerate_nondegenerate_pairings(
    const FiniteAbelianGroup& g, std::uint64_t gram_cap) {
  const auto& factors = g.factors();
  const std::size_t n = factors.size();
  std::vector<std::vector<QZ>> gram(n, std::vector<QZ>(n));
  std::vector<LinkingPairing> out;
  if (n == 0) {
    out.emplace_back(g, gram);
    return out;
  }
  // Free slots: upper triangle entries, each ranging over the
  // gcd(d_i, d_j)-torsion of Q/Z.
  struct Slot {
    std::size_t i, j;
    unsigned long den;
  };
  std::vector<Slot> slots;
  mpz_class total = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      mpz_class d;
      mpz_gcd(d.get_mpz_t(), factors[i].get_mpz_t(), factors[j].get_mpz_t());
      slots.push_back({i, j, d.get_ui()});
      total *= d;
    }
  if (!total.fits_ulong_p() || total.get_ui() > gram_cap)
    throw size_cap_error("too many candidate pairings to enumerate");
  std::vector<unsigned long> num(slots.size(), 0);
  for (;;) {
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const QZ v(static_cast<long>(num[s]), static_cast<long>(slots[s].den));
      gram[slots[s].i][slots[s].j] = v;
      gram[slots[s].j][slots[s].i] = v;
    }
    LinkingPairing b(g, gram);
    if (is_nondegenerate(b)) out.push_back(std::move(b));
    std::size_t s = 0;
    while (s < slots.size() && ++num[s] == slots[s].den) num[s++] = 0;
    if (s == slots.size()) break;
  }
  return out;
}

}  // namespace spinsurg
