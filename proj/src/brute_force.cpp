#include <atomic>
#include <cstdint>
#include <numeric>
#include <vector>

#include "spinsurg/classification.hpp"
#include "spinsurg/compiled.hpp"
#include "spinsurg/snf.hpp"

namespace spinsurg {
namespace {

using detail::CompiledGroup;
using detail::CompiledPairing;
using detail::CompiledQuadratic;

std::uint32_t element_order(const CompiledGroup& g, const std::uint32_t* a) {
  std::uint64_t l = 1;
  for (std::size_t i = 0; i < g.rank(); ++i)
    l = std::lcm(l, std::uint64_t{g.orders[i] / std::gcd(g.orders[i], a[i])});
  return static_cast<std::uint32_t>(l);
}

// Per-element tables of the target side, plus the source generator data
// the pruned depth-first search compares against.  Source and target
// live on the same invariant factors and share the scaled denominator.
struct Search {
  CompiledGroup g;                       // common group shape
  CompiledPairing tb;                    // target pairing
  std::vector<std::uint32_t> coords;     // target coords, n per element
  std::vector<std::uint32_t> order;      // target element orders
  std::vector<std::uint32_t> selfval;    // target q(x) or b(x,x)
  std::size_t n = 0;
  std::vector<std::uint32_t> src_cross;  // n x n source pairing values
  std::vector<std::vector<std::uint32_t>> cands;  // per source generator
  bool check_leaves = false;  // degenerate source: verify bijectivity
};

// Whether generator images extend to a bijection (needed only when the
// source pairing is degenerate; otherwise injectivity is automatic).
bool leaf_bijective(const Search& s, const std::vector<std::uint32_t>& img) {
  const std::size_t n = s.n;
  const std::uint64_t total = s.g.size;
  std::vector<std::uint8_t> seen(total, 0);
  std::vector<std::uint32_t> a(n), y(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    s.g.decode(idx, a.data());
    for (std::size_t k = 0; k < n; ++k) y[k] = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      const std::uint32_t* ic = s.coords.data() + std::size_t{img[i]} * n;
      for (std::size_t k = 0; k < n; ++k)
        y[k] = static_cast<std::uint32_t>(
            (y[k] + std::uint64_t{a[i]} * ic[k]) % s.g.orders[k]);
    }
    std::uint8_t& mark = seen[s.g.encode(y.data())];
    if (mark) return false;
    mark = 1;
  }
  return true;
}

bool extend(const Search& s, std::vector<std::uint32_t>& img, std::size_t i) {
  if (i == s.n) return !s.check_leaves || leaf_bijective(s, img);
  const std::size_t n = s.n;
  for (std::uint32_t cand : s.cands[i]) {
    const std::uint32_t* cc = s.coords.data() + std::size_t{cand} * n;
    bool ok = true;
    for (std::size_t j = 0; j < i; ++j) {
      const std::uint32_t* jc = s.coords.data() + std::size_t{img[j]} * n;
      if (s.tb.eval(cc, jc) != s.src_cross[i * n + j]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    img[i] = cand;
    if (extend(s, img, i + 1)) return true;
  }
  return false;
}

IsoWitness witness_from(const FiniteAbelianGroup& target, const Search& s,
                        const std::vector<std::uint32_t>& img) {
  IsoWitness w;
  w.found = true;
  for (std::size_t i = 0; i < s.n; ++i) {
    const std::uint32_t* c = s.coords.data() + std::size_t{img[i]} * s.n;
    std::vector<mpz_class> a(s.n);
    for (std::size_t k = 0; k < s.n; ++k) a[k] = c[k];
    w.images.push_back(target.element(std::move(a)));
  }
  return w;
}

// Common search body: qa/qb are null for pairing searches.  sa and sb
// must already share a denominator.
IsoWitness search_iso(const CompiledPairing& sa,
                      const std::vector<std::uint32_t>* qa,
                      const CompiledPairing& sb,
                      const std::vector<std::uint32_t>* qb,
                      const FiniteAbelianGroup& target, bool parallel) {
  Search s;
  s.g = sb.g;
  s.tb = sb;
  s.n = s.g.rank();
  if (s.n == 0) {
    IsoWitness w;
    w.found = true;
    return w;
  }
  const std::size_t n = s.n;
  const std::uint64_t total = s.g.size;
  s.coords.resize(total * n);
  s.order.resize(total);
  s.selfval.resize(total);
  CompiledQuadratic tq;
  if (qb) {
    tq.b = sb;
    tq.qgen = *qb;
  }
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint32_t* c = s.coords.data() + idx * n;
    s.g.decode(idx, c);
    s.order[idx] = element_order(s.g, c);
    s.selfval[idx] = qb ? tq.eval(c) : sb.eval(c, c);
  }
  s.src_cross.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      s.src_cross[i * n + j] = sa.gram_at(i, j);
  s.cands.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t want_order = sa.g.orders[i];
    const std::uint32_t want_self = qa ? (*qa)[i] : sa.gram_at(i, i);
    for (std::uint64_t idx = 0; idx < total; ++idx)
      if (s.order[idx] == want_order && s.selfval[idx] == want_self)
        s.cands[i].push_back(static_cast<std::uint32_t>(idx));
    if (s.cands[i].empty()) return {};
  }
  s.check_leaves = detail::kernel_size(sa) > 1;

  if (!parallel) {
    std::vector<std::uint32_t> img(n);
    if (extend(s, img, 0)) return witness_from(target, s, img);
    return {};
  }

  // Parallel over the first generator's candidates; the winner is the
  // smallest candidate position that succeeds, so the witness matches
  // the serial search exactly.
  const auto& first = s.cands[0];
  const std::int64_t m = static_cast<std::int64_t>(first.size());
  std::atomic<std::size_t> best{SIZE_MAX};
  std::vector<std::vector<std::uint32_t>> winners(first.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t p = 0; p < m; ++p) {
    const auto pos = static_cast<std::size_t>(p);
    if (pos >= best.load(std::memory_order_relaxed)) continue;
    std::vector<std::uint32_t> img(n);
    img[0] = first[pos];
    if (extend(s, img, 1)) {
      winners[pos] = img;
      std::size_t cur = best.load();
      while (pos < cur && !best.compare_exchange_weak(cur, pos)) {
      }
    }
  }
  const std::size_t win = best.load();
  if (win == SIZE_MAX) return {};
  return witness_from(target, s, winners[win]);
}

// True iff the images generate the whole target group: the cokernel of
// [image coords | diag(d)] must be trivial.
bool images_span(const FiniteAbelianGroup& target,
                 const std::vector<GroupElement>& images) {
  const std::size_t n = target.rank();
  IntMatrix m(n, n + images.size());
  for (std::size_t j = 0; j < images.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = images[j].coords()[i];
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, images.size() + i) = target.factors()[i];
  const auto d = smith_normal_form(m).diagonal();
  for (std::size_t i = 0; i < n; ++i)
    if (d[i] != 1) return false;
  return true;
}

bool witness_shape_ok(const FiniteAbelianGroup& src,
                      const FiniteAbelianGroup& dst, const IsoWitness& w) {
  if (!w.found) return false;
  if (src.factors() != dst.factors()) return false;
  if (w.images.size() != src.rank()) return false;
  for (std::size_t i = 0; i < w.images.size(); ++i) {
    if (!(w.images[i].group() == dst)) return false;
    // well-defined hom: d_i * image_i = 0
    if (!w.images[i].times(src.factors()[i]).is_zero()) return false;
  }
  return images_span(dst, w.images);
}

}  // namespace

IsoWitness brute_force_iso(const LinkingPairing& a, const LinkingPairing& b,
                           const IsoOptions& opts) {
  if (a.group().factors() != b.group().factors()) return {};
  auto ca = detail::compile_pairing(a, opts.brute_force_cap);
  auto cb = detail::compile_pairing(b, opts.brute_force_cap);
  const auto denom = std::lcm<std::uint64_t>(ca.denom, cb.denom);
  ca = detail::rescale(ca, static_cast<std::uint32_t>(denom));
  cb = detail::rescale(cb, static_cast<std::uint32_t>(denom));
  return search_iso(ca, nullptr, cb, nullptr, b.group(), opts.parallel);
}

IsoWitness brute_force_iso(const QuadraticForm& a, const QuadraticForm& b,
                           const IsoOptions& opts) {
  if (a.group().factors() != b.group().factors()) return {};
  auto ca = detail::compile_quadratic(a, opts.brute_force_cap);
  auto cb = detail::compile_quadratic(b, opts.brute_force_cap);
  const auto denom = std::lcm<std::uint64_t>(ca.b.denom, cb.b.denom);
  ca = detail::rescale(ca, static_cast<std::uint32_t>(denom));
  cb = detail::rescale(cb, static_cast<std::uint32_t>(denom));
  return search_iso(ca.b, &ca.qgen, cb.b, &cb.qgen, b.group(), opts.parallel);
}

bool witness_is_pairing_iso(const LinkingPairing& a, const LinkingPairing& b,
                            const IsoWitness& w) {
  if (!witness_shape_ok(a.group(), b.group(), w)) return false;
  for (std::size_t i = 0; i < w.images.size(); ++i)
    for (std::size_t j = 0; j < w.images.size(); ++j)
      if (!(eval_pairing(b, w.images[i], w.images[j]) == a.gram_at(i, j)))
        return false;
  return true;
}

bool witness_is_quadratic_iso(const QuadraticForm& a, const QuadraticForm& b,
                              const IsoWitness& w) {
  if (!witness_is_pairing_iso(a.pairing(), b.pairing(), w)) return false;
  for (std::size_t i = 0; i < w.images.size(); ++i)
    if (!(eval_quadratic(b, w.images[i]) == a.qgen()[i])) return false;
  return true;
}

}  // namespace spinsurg
