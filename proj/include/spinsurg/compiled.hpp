#pragma once

// Machine-integer compilations of groups and forms for the enumeration
// kernels (Gauss sums, kernels, brute-force searches).  Only valid for
// groups within the enumeration cap; construction enforces this.

#include <cstdint>
#include <vector>

#include "spinsurg/errors.hpp"
#include "spinsurg/forms.hpp"

namespace spinsurg::detail {

struct CompiledGroup {
  std::vector<std::uint32_t> orders;  // invariant factors
  std::uint64_t size = 1;             // product of orders

  std::size_t rank() const { return orders.size(); }
  // Mixed-radix decode of a flat index into coordinates.
  void decode(std::uint64_t idx, std::uint32_t* coords) const {
    for (std::size_t i = 0; i < orders.size(); ++i) {
      coords[i] = static_cast<std::uint32_t>(idx % orders[i]);
      idx /= orders[i];
    }
  }
  std::uint64_t encode(const std::uint32_t* coords) const {
    std::uint64_t idx = 0;
    for (std::size_t i = orders.size(); i-- > 0;)
      idx = idx * orders[i] + coords[i];
    return idx;
  }
};

CompiledGroup compile_group(const FiniteAbelianGroup& g,
                            std::uint64_t cap = kEnumerationCap);

// Pairing with values scaled to integers mod denom (denom = lcm of all
// gram denominators; every value is denom * b(g_i, g_j) mod denom).
struct CompiledPairing {
  CompiledGroup g;
  std::uint32_t denom = 1;
  std::vector<std::uint32_t> gram;  // rank x rank, row-major

  std::uint32_t gram_at(std::size_t i, std::size_t j) const {
    return gram[i * g.rank() + j];
  }
  // denom * b(x, y) mod denom for coordinate vectors x, y.
  std::uint32_t eval(const std::uint32_t* x, const std::uint32_t* y) const;
  // True iff b(x, -) vanishes identically (checked on generators).
  bool in_kernel(const std::uint32_t* x) const;
};

CompiledPairing compile_pairing(const LinkingPairing& b,
                                std::uint64_t cap = kEnumerationCap);

// Quadratic form scaled the same way; shares denom with its pairing.
struct CompiledQuadratic {
  CompiledPairing b;
  std::vector<std::uint32_t> qgen;  // denom * q(g_i) mod denom

  // denom * q(x) mod denom.
  std::uint32_t eval(const std::uint32_t* x) const;
};

CompiledQuadratic compile_quadratic(const QuadraticForm& q,
                                    std::uint64_t cap = kEnumerationCap);

// Rescale to a larger denominator (must be a multiple of the current
// one); used to put two compiled structures over a common denominator.
CompiledPairing rescale(const CompiledPairing& p, std::uint32_t denom);
CompiledQuadratic rescale(const CompiledQuadratic& q, std::uint32_t denom);

// Number of elements in the kernel of the pairing (parallel sweep).
std::uint64_t kernel_size(const CompiledPairing& b);

// Histogram of q values: counts[v] = #{x : denom * q(x) = v}.
// The parallel flag selects the OpenMP sweep; both orders produce
// bit-identical counts.
std::vector<std::uint64_t> value_histogram(const CompiledQuadratic& q,
                                           bool parallel = true);

// Snap the normalized Gauss sum of a value histogram to Z8 + {inf};
// throws internal_error when the modulus is not within 1e-6 of 0 or 1.
GaussBrown snap_gauss_sum(const std::vector<std::uint64_t>& counts,
                          std::uint32_t denom, std::uint64_t kernel,
                          std::uint64_t group_size);

// Snap an already-normalized complex number the same way.
GaussBrown snap_unit_complex(double re, double im);

// Trial-division factorization, ascending primes; size_cap_error for
// inputs too large to factor at desk scale.
std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n);

}  // namespace spinsurg::detail
