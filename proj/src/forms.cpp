#include "spinsurg/forms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <unordered_set>

#include "spinsurg/compiled.hpp"

namespace spinsurg {

int GaussBrown::value() const {
  if (!finite_) throw precondition_error("GaussBrown: value() of infinity");
  return v_;
}

GaussBrown GaussBrown::operator+(const GaussBrown& o) const {
  if (!finite_ || !o.finite_) return infinite();
  return finite((v_ + o.v_) % 8);
}

GaussBrown GaussBrown::operator-() const {
  if (!finite_) return infinite();
  return finite((8 - v_) % 8);
}

std::string GaussBrown::str() const {
  return finite_ ? std::to_string(v_) : "inf";
}

GaussBrown GaussBrown::parse(const std::string& s) {
  if (s == "inf") return infinite();
  if (s.size() == 1 && s[0] >= '0' && s[0] <= '7')
    return finite(s[0] - '0');
  throw parse_error("GaussBrown: cannot parse '" + s + "'");
}

std::ostream& operator<<(std::ostream& os, const GaussBrown& g) {
  return os << g.str();
}

LinkingPairing::LinkingPairing(FiniteAbelianGroup group,
                               std::vector<std::vector<QZ>> gram)
    : g_(std::move(group)), gram_(std::move(gram)) {
  const std::size_t n = g_.rank();
  if (gram_.size() != n)
    throw precondition_error("LinkingPairing: gram size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n)
      throw precondition_error("LinkingPairing: gram not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (gram_[i][j] != gram_[j][i])
        throw precondition_error("LinkingPairing: gram not symmetric");
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), g_.factors()[i].get_mpz_t(),
              g_.factors()[j].get_mpz_t());
      if (g % gram_[i][j].den() != 0)
        throw precondition_error(
            "LinkingPairing: value order incompatible with generator orders");
    }
  }
}

QuadraticForm::QuadraticForm(FiniteAbelianGroup group, std::vector<QZ> qgen,
                             std::vector<std::vector<QZ>> gram)
    : QuadraticForm(std::move(qgen),
                    LinkingPairing(std::move(group), std::move(gram))) {}

QuadraticForm::QuadraticForm(std::vector<QZ> qgen, LinkingPairing pairing)
    : qgen_(std::move(qgen)), b_(std::move(pairing)) {
  const auto& d = b_.group().factors();
  if (qgen_.size() != d.size())
    throw precondition_error("QuadraticForm: generator value count mismatch");
  for (std::size_t i = 0; i < qgen_.size(); ++i) {
    if (!qgen_[i].times(d[i] * d[i]).is_zero())
      throw precondition_error(
          "QuadraticForm: d_i^2 * q(g_i) != 0 (not well defined)");
    if (!qgen_[i].times(2 * d[i]).is_zero())
      throw precondition_error(
          "QuadraticForm: order of q(g_i) does not divide 2 d_i");
    if (qgen_[i] + qgen_[i] != b_.gram_at(i, i))
      throw precondition_error(
          "QuadraticForm: pairing diagonal is not 2 q(g_i)");
  }
}

QZ eval_pairing(const LinkingPairing& b, const GroupElement& x,
                const GroupElement& y) {
  if (x.group() != b.group() || y.group() != b.group())
    throw precondition_error("eval_pairing: group mismatch");
  QZ acc;
  const std::size_t n = b.group().rank();
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coords()[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y.coords()[j] == 0) continue;
      acc = acc + b.gram_at(i, j).times(x.coords()[i] * y.coords()[j]);
    }
  }
  return acc;
}

QZ eval_quadratic(const QuadraticForm& q, const GroupElement& x) {
  if (x.group() != q.group())
    throw precondition_error("eval_quadratic: group mismatch");
  QZ acc;
  const std::size_t n = q.group().rank();
  const auto& a = x.coords();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    acc = acc + q.qgen()[i].times(a[i] * a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a[j] == 0) continue;
      acc = acc + q.pairing().gram_at(i, j).times(a[i] * a[j]);
    }
  }
  return acc;
}

const LinkingPairing& associated_pairing(const QuadraticForm& q) {
  return q.pairing();
}

std::vector<GroupElement> pairing_kernel(const LinkingPairing& b) {
  const auto cb = detail::compile_pairing(b);
  const std::size_t n = cb.g.rank();
  std::vector<std::uint32_t> coords(n);

  std::vector<std::uint64_t> kernel_indices;
  for (std::uint64_t idx = 0; idx < cb.g.size; ++idx) {
    cb.g.decode(idx, coords.data());
    if (cb.in_kernel(coords.data())) kernel_indices.push_back(idx);
  }

  // Greedy generating set: walk the kernel, keep elements outside the
  // subgroup generated so far.
  auto add = [&](std::uint64_t s, std::uint64_t t) {
    std::vector<std::uint32_t> u(n), v(n), w(n);
    cb.g.decode(s, u.data());
    cb.g.decode(t, v.data());
    for (std::size_t i = 0; i < n; ++i) w[i] = (u[i] + v[i]) % cb.g.orders[i];
    return cb.g.encode(w.data());
  };

  std::unordered_set<std::uint64_t> span{0};
  std::vector<std::uint64_t> gens;
  for (const auto idx : kernel_indices) {
    if (idx == 0 || span.count(idx)) continue;
    gens.push_back(idx);
    // New span = union over k of (old span + k * idx).
    std::vector<std::uint64_t> base(span.begin(), span.end());
    std::uint64_t mult = idx;
    while (mult != 0) {
      for (const auto s : base) span.insert(add(s, mult));
      mult = add(mult, idx);
    }
  }

  std::vector<GroupElement> out;
  for (const auto idx : gens) {
    cb.g.decode(idx, coords.data());
    std::vector<mpz_class> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = coords[i];
    out.push_back(b.group().element(std::move(a)));
  }
  return out;
}

std::uint64_t pairing_kernel_order(const LinkingPairing& b) {
  return detail::kernel_size(detail::compile_pairing(b));
}

bool is_nondegenerate(const LinkingPairing& b) {
  return pairing_kernel_order(b) == 1;
}

GaussBrown gauss_brown(const QuadraticForm& q) {
  const auto cq = detail::compile_quadratic(q);
  const std::uint64_t kern = detail::kernel_size(cq.b);
  const auto counts = detail::value_histogram(cq, /*parallel=*/true);
  return detail::snap_gauss_sum(counts, cq.b.denom, kern, cq.b.g.size);
}

GaussBrown gauss_brown_reference(const QuadraticForm& q) {
  // Exact-rational serial path: enumerate group elements as exact
  // coordinate vectors and accumulate e^{2 pi i q(x)} term by term.
  const auto cg = detail::compile_group(q.group());
  const std::size_t n = cg.rank();
  std::vector<std::uint32_t> coords(n);
  double re = 0, im = 0;
  std::uint64_t kern = 0;
  const double tau = 2.0 * std::numbers::pi;
  for (std::uint64_t idx = 0; idx < cg.size; ++idx) {
    cg.decode(idx, coords.data());
    std::vector<mpz_class> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = coords[i];
    const GroupElement x = q.group().element(std::move(a));
    const QZ v = eval_quadratic(q, x);
    const double theta = tau * v.num().get_d() / v.den().get_d();
    re += std::cos(theta);
    im += std::sin(theta);
    bool in_kernel = true;
    for (std::size_t j = 0; j < n && in_kernel; ++j)
      in_kernel = eval_pairing(q.pairing(), x, q.group().generator(j)).is_zero();
    if (in_kernel) ++kern;
  }
  const double norm = std::sqrt(static_cast<double>(kern) *
                                static_cast<double>(cg.size));
  return detail::snap_unit_complex(re / norm, im / norm);
}

mpz_class t2_subgroup_order(const FiniteAbelianGroup& g) {
  mpz_class n = 1;
  for (const auto& d : g.factors())
    if (d % 2 == 0) n *= 2;
  return n;
}

QuadraticForm t2_action(const GroupElement& x, const QuadraticForm& q) {
  if (x.group() != q.group())
    throw precondition_error("t2_action: group mismatch");
  if (!x.times(2).is_zero())
    throw precondition_error("t2_action: element does not have order <= 2");
  std::vector<QZ> qgen = q.qgen();
  for (std::size_t i = 0; i < qgen.size(); ++i)
    qgen[i] = qgen[i] + eval_pairing(q.pairing(), x, q.group().generator(i));
  return QuadraticForm(std::move(qgen), q.pairing());
}

std::vector<QuadraticForm> quad_refinements(const LinkingPairing& b) {
  if (!is_nondegenerate(b))
    throw precondition_error("quad_refinements: pairing is degenerate");
  const auto& d = b.group().factors();
  const std::size_t n = d.size();

  std::vector<std::vector<QZ>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Solve 2y = b(g_i, g_i) subject to the well-definedness bounds.
    const QZ& c = b.gram_at(i, i);
    for (const QZ& y : {QZ(c.num(), 2 * c.den()),
                        QZ(c.num(), 2 * c.den()) + QZ(1, 2)}) {
      if (y.times(d[i] * d[i]).is_zero() && y.times(2 * d[i]).is_zero())
        candidates[i].push_back(y);
    }
    if (candidates[i].empty())
      throw precondition_error(
          "quad_refinements: no refinement at generator " + std::to_string(i));
  }

  std::vector<QuadraticForm> out;
  std::vector<std::size_t> pick(n, 0);
  for (;;) {
    std::vector<QZ> qgen(n);
    for (std::size_t i = 0; i < n; ++i) qgen[i] = candidates[i][pick[i]];
    out.emplace_back(std::move(qgen), b);
    std::size_t i = n;
    while (i-- > 0) {
      if (++pick[i] < candidates[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

namespace {

// One cyclic factor of a direct-sum operand, tagged with its source.
struct Piece {
  int side;          // 0 = left operand, 1 = right operand
  std::size_t idx;   // generator index in that operand
  mpz_class mult;    // multiplier: factor / p^v
  unsigned exp;      // v
};

// Recombines the cyclic prime-power pieces of a + b into invariant
// factors (largest prime powers together), returning the new group and
// the formal generator expansions.
struct Recombined {
  FiniteAbelianGroup group;
  std::vector<std::vector<Piece>> gens;
};

Recombined recombine(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
  std::map<mpz_class, std::vector<Piece>> by_prime;
  for (int side = 0; side < 2; ++side) {
    const auto& g = side == 0 ? a : b;
    for (std::size_t i = 0; i < g.rank(); ++i) {
      for (const auto& [p, e] : detail::factorize(g.factors()[i])) {
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        by_prime[p].push_back(Piece{side, i, g.factors()[i] / pe, e});
      }
    }
  }
  // Within each prime, largest exponent first (stable on source order).
  std::size_t ranks = 0;
  for (auto& [p, pieces] : by_prime) {
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const Piece& x, const Piece& y) { return x.exp > y.exp; });
    ranks = std::max(ranks, pieces.size());
  }

  std::vector<mpz_class> orders(ranks, 1);
  std::vector<std::vector<Piece>> gens(ranks);
  for (const auto& [p, pieces] : by_prime) {
    for (std::size_t r = 0; r < pieces.size(); ++r) {
      mpz_class pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), pieces[r].exp);
      orders[r] *= pe;
      gens[r].push_back(pieces[r]);
    }
  }
  // orders is non-increasing; invariant factors ascend.
  std::reverse(orders.begin(), orders.end());
  std::reverse(gens.begin(), gens.end());
  return Recombined{FiniteAbelianGroup(std::move(orders)), std::move(gens)};
}

QZ expand_pairing(const LinkingPairing& a, const LinkingPairing& b,
                  const std::vector<Piece>& x, const std::vector<Piece>& y) {
  QZ acc;
  for (const auto& u : x)
    for (const auto& w : y) {
      if (u.side != w.side) continue;  // cross terms are orthogonal
      const auto& src = u.side == 0 ? a : b;
      acc = acc + src.gram_at(u.idx, w.idx).times(u.mult * w.mult);
    }
  return acc;
}

}  // namespace

LinkingPairing direct_sum(const LinkingPairing& a, const LinkingPairing& b) {
  const Recombined rec = recombine(a.group(), b.group());
  const std::size_t n = rec.gens.size();
  std::vector<std::vector<QZ>> gram(n, std::vector<QZ>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gram[i][j] = expand_pairing(a, b, rec.gens[i], rec.gens[j]);
  return LinkingPairing(rec.group, std::move(gram));
}

QuadraticForm direct_sum(const QuadraticForm& a, const QuadraticForm& b) {
  const Recombined rec = recombine(a.group(), b.group());
  const std::size_t n = rec.gens.size();
  std::vector<std::vector<QZ>> gram(n, std::vector<QZ>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gram[i][j] =
          expand_pairing(a.pairing(), b.pairing(), rec.gens[i], rec.gens[j]);
  std::vector<QZ> qgen(n);
  for (std::size_t i = 0; i < n; ++i) {
    QZ acc;
    const auto& pieces = rec.gens[i];
    for (std::size_t u = 0; u < pieces.size(); ++u) {
      const auto& q = pieces[u].side == 0 ? a : b;
      acc = acc + q.qgen()[pieces[u].idx].times(pieces[u].mult * pieces[u].mult);
      for (std::size_t w = u + 1; w < pieces.size(); ++w) {
        if (pieces[u].side != pieces[w].side) continue;
        const auto& src = pieces[u].side == 0 ? a.pairing() : b.pairing();
        acc = acc + src.gram_at(pieces[u].idx, pieces[w].idx)
                        .times(pieces[u].mult * pieces[w].mult);
      }
    }
    qgen[i] = acc;
  }
  return QuadraticForm(std::move(qgen),
                       LinkingPairing(rec.group, std::move(gram)));
}

std::vector<std::pair<mpz_class, LinkingPairing>> p_primary_decomposition(
    const LinkingPairing& b) {
  std::vector<std::pair<mpz_class, LinkingPairing>> out;
  const auto& g = b.group();
  std::map<mpz_class, std::vector<std::pair<std::size_t, unsigned>>> primes;
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (const auto& [p, e] : detail::factorize(g.factors()[i]))
      primes[p].emplace_back(i, e);

  for (const auto& [p, occurrences] : primes) {
    std::vector<mpz_class> factors;
    std::vector<GroupElement> gens;
    for (const auto& [i, e] : occurrences) {
      mpz_class pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
      factors.push_back(pe);
      gens.push_back(g.generator(i).times(g.factors()[i] / pe));
    }
    FiniteAbelianGroup gp(std::move(factors));
    const std::size_t n = gens.size();
    std::vector<std::vector<QZ>> gram(n, std::vector<QZ>(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        gram[x][y] = eval_pairing(b, gens[x], gens[y]);
    out.emplace_back(p, LinkingPairing(std::move(gp), std::move(gram)));
  }
  return out;
}

std::vector<std::pair<mpz_class, QuadraticForm>> p_primary_decomposition(
    const QuadraticForm& q) {
  std::vector<std::pair<mpz_class, QuadraticForm>> out;
  const auto parts = p_primary_decomposition(q.pairing());
  const auto& g = q.group();
  for (const auto& [p, bp] : parts) {
    // Rebuild the same generators to evaluate q on them.
    std::vector<QZ> qgen;
    std::size_t k = 0;
    for (std::size_t i = 0; i < g.rank(); ++i)
      for (const auto& [pp, e] : detail::factorize(g.factors()[i])) {
        if (pp != p) continue;
        (void)e;
        const auto& pe = bp.group().factors()[k];
        qgen.push_back(
            eval_quadratic(q, g.generator(i).times(g.factors()[i] / pe)));
        ++k;
      }
    out.emplace_back(p, QuadraticForm(std::move(qgen), bp));
  }
  return out;
}

}  // namespace spinsurg
