#include "spinsurg/compiled.hpp"

#include <cmath>
#include <numbers>

namespace spinsurg::detail {

CompiledGroup compile_group(const FiniteAbelianGroup& g, std::uint64_t cap) {
  CompiledGroup cg;
  mpz_class n = 1;
  for (const auto& d : g.factors()) n *= d;
  if (!n.fits_ulong_p() || n.get_ui() > cap)
    throw size_cap_error("group too large to enumerate (order > cap)");
  cg.size = n.get_ui();
  for (const auto& d : g.factors())
    cg.orders.push_back(static_cast<std::uint32_t>(d.get_ui()));
  return cg;
}

namespace {

// lcm of the denominators of all values the form takes on generators.
std::uint32_t common_denominator(const LinkingPairing& b,
                                 const std::vector<QZ>* qgen) {
  mpz_class l = 1;
  for (const auto& row : b.gram())
    for (const auto& v : row)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
  if (qgen)
    for (const auto& v : *qgen)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
  if (!l.fits_ulong_p() || l.get_ui() > (std::uint64_t{1} << 31))
    throw internal_error("compiled form denominator out of range");
  return static_cast<std::uint32_t>(l.get_ui());
}

std::uint32_t scaled_value(const QZ& v, std::uint32_t denom) {
  // v = num/den with den | denom; the scaled value is num * denom/den.
  const mpz_class s = v.num() * (denom / v.den());
  return static_cast<std::uint32_t>(s.get_ui());
}

CompiledPairing compile_pairing_scaled(const LinkingPairing& b,
                                       std::uint64_t cap,
                                       std::uint32_t denom) {
  CompiledPairing cb;
  cb.g = compile_group(b.group(), cap);
  cb.denom = denom;
  const std::size_t n = cb.g.rank();
  cb.gram.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cb.gram[i * n + j] = scaled_value(b.gram_at(i, j), denom);
  return cb;
}

}  // namespace

std::uint32_t CompiledPairing::eval(const std::uint32_t* x,
                                    const std::uint32_t* y) const {
  const std::size_t n = g.rank();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      acc += (std::uint64_t{x[i]} * y[j] % denom) * gram[i * n + j] % denom;
    }
  }
  return static_cast<std::uint32_t>(acc % denom);
}

bool CompiledPairing::in_kernel(const std::uint32_t* x) const {
  const std::size_t n = g.rank();
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i)
      acc += std::uint64_t{x[i]} * gram[i * n + j] % denom;
    if (acc % denom != 0) return false;
  }
  return true;
}

CompiledPairing compile_pairing(const LinkingPairing& b, std::uint64_t cap) {
  return compile_pairing_scaled(b, cap, common_denominator(b, nullptr));
}

std::uint32_t CompiledQuadratic::eval(const std::uint32_t* x) const {
  const std::size_t n = b.g.rank();
  const std::uint32_t denom = b.denom;
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    acc += (std::uint64_t{x[i]} * x[i] % denom) * qgen[i] % denom;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (x[j] == 0) continue;
      acc += (std::uint64_t{x[i]} * x[j] % denom) * b.gram[i * n + j] % denom;
    }
  }
  return static_cast<std::uint32_t>(acc % denom);
}

CompiledQuadratic compile_quadratic(const QuadraticForm& q,
                                    std::uint64_t cap) {
  CompiledQuadratic cq;
  const std::uint32_t denom = common_denominator(q.pairing(), &q.qgen());
  cq.b = compile_pairing_scaled(q.pairing(), cap, denom);
  for (const auto& v : q.qgen()) cq.qgen.push_back(scaled_value(v, denom));
  return cq;
}

CompiledPairing rescale(const CompiledPairing& p, std::uint32_t denom) {
  if (denom % p.denom != 0)
    throw precondition_error("rescale: denominator must be a multiple");
  const std::uint32_t f = denom / p.denom;
  CompiledPairing out = p;
  out.denom = denom;
  for (auto& v : out.gram) v *= f;
  return out;
}

CompiledQuadratic rescale(const CompiledQuadratic& q, std::uint32_t denom) {
  const std::uint32_t f = denom / q.b.denom;
  CompiledQuadratic out;
  out.b = rescale(q.b, denom);
  out.qgen = q.qgen;
  for (auto& v : out.qgen) v *= f;
  return out;
}

std::uint64_t kernel_size(const CompiledPairing& b) {
  const std::size_t n = b.g.rank();
  const std::int64_t total = static_cast<std::int64_t>(b.g.size);
  std::uint64_t count = 0;
#pragma omp parallel reduction(+ : count)
  {
    std::vector<std::uint32_t> coords(n);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      b.g.decode(static_cast<std::uint64_t>(idx), coords.data());
      if (b.in_kernel(coords.data())) ++count;
    }
  }
  return count;
}

std::vector<std::uint64_t> value_histogram(const CompiledQuadratic& q,
                                           bool parallel) {
  const std::size_t n = q.b.g.rank();
  const std::uint64_t total = q.b.g.size;
  std::vector<std::uint64_t> counts(q.b.denom, 0);
  if (!parallel) {
    std::vector<std::uint32_t> coords(n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      q.b.g.decode(idx, coords.data());
      ++counts[q.eval(coords.data())];
    }
    return counts;
  }
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(q.b.denom, 0);
    std::vector<std::uint32_t> coords(n);
    const std::int64_t itotal = static_cast<std::int64_t>(total);
#pragma omp for schedule(static) nowait
    for (std::int64_t idx = 0; idx < itotal; ++idx) {
      q.b.g.decode(static_cast<std::uint64_t>(idx), coords.data());
      ++local[q.eval(coords.data())];
    }
#pragma omp critical
    {
      for (std::size_t v = 0; v < counts.size(); ++v) counts[v] += local[v];
    }
  }
  return counts;
}

GaussBrown snap_unit_complex(double re, double im) {
  constexpr double kTol = 1e-6;
  const double mod = std::hypot(re, im);
  if (mod < kTol) return GaussBrown::infinite();
  if (std::abs(mod - 1.0) > kTol)
    throw internal_error("gauss sum modulus is neither 0 nor 1");
  const double step = std::numbers::pi / 4.0;
  const double angle = std::atan2(im, re);
  const long k = std::lround(angle / step);
  double resid = angle - static_cast<double>(k) * step;
  if (std::abs(resid) > kTol)
    throw internal_error("gauss sum angle is not a multiple of pi/4");
  return GaussBrown::finite(k);
}

GaussBrown snap_gauss_sum(const std::vector<std::uint64_t>& counts,
                          std::uint32_t denom, std::uint64_t kernel,
                          std::uint64_t group_size) {
  double re = 0, im = 0;
  const double tau = 2.0 * std::numbers::pi;
  for (std::uint32_t v = 0; v < denom; ++v) {
    if (counts[v] == 0) continue;
    const double theta = tau * v / denom;
    const double c = static_cast<double>(counts[v]);
    re += c * std::cos(theta);
    im += c * std::sin(theta);
  }
  const double norm =
      std::sqrt(static_cast<double>(kernel) * static_cast<double>(group_size));
  return snap_unit_complex(re / norm, im / norm);
}

std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n) {
  if (n < 1) throw precondition_error("factorize: input must be positive");
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 40)
    throw size_cap_error("factorize: input too large for trial division");
  std::vector<std::pair<mpz_class, unsigned>> out;
  mpz_class m = n;
  auto strip = [&](const mpz_class& p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(2);
  for (mpz_class p = 3; p * p <= m; p += 2) strip(p);
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

}  // namespace spinsurg::detail
