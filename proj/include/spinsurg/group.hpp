#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "spinsurg/errors.hpp"

namespace spinsurg {

class GroupElement;

// Finite abelian group in invariant-factor form: Z_{d1} + ... + Z_{dn}
// with d1 | d2 | ... | dn and every d_i >= 2.  The empty list is the
// trivial group.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<mpz_class> invariant_factors);

  std::size_t rank() const { return d_.size(); }
  const std::vector<mpz_class>& factors() const { return d_; }
  mpz_class order() const;
  bool is_trivial() const { return d_.empty(); }

  GroupElement zero() const;
  GroupElement generator(std::size_t i) const;
  GroupElement element(std::vector<mpz_class> coords) const;

  // Order as uint64 when it does not exceed cap; size_cap_error otherwise.
  std::uint64_t enumerable_order(std::uint64_t cap = kEnumerationCap) const;

  bool operator==(const FiniteAbelianGroup&) const = default;

 private:
  std::vector<mpz_class> d_;
};

// Coordinates a_i with 0 <= a_i < d_i; carries a copy of its group so
// that mismatched-group operations can be rejected.
class GroupElement {
 public:
  GroupElement(FiniteAbelianGroup g, std::vector<mpz_class> coords);

  const FiniteAbelianGroup& group() const { return g_; }
  const std::vector<mpz_class>& coords() const { return a_; }

  GroupElement operator+(const GroupElement& o) const;
  GroupElement operator-() const;
  GroupElement times(const mpz_class& k) const;

  bool is_zero() const;
  mpz_class order() const;  // additive order

  bool operator==(const GroupElement&) const = default;

 private:
  FiniteAbelianGroup g_;
  std::vector<mpz_class> a_;
};

}  // namespace spinsurg
