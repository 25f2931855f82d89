#include "spinsurg/group.hpp"

namespace spinsurg {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<mpz_class> invariant_factors)
    : d_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (d_[i] < 2)
      throw precondition_error("FiniteAbelianGroup: invariant factor < 2");
    if (i > 0 && d_[i] % d_[i - 1] != 0)
      throw precondition_error("FiniteAbelianGroup: divisibility chain broken");
  }
}

mpz_class FiniteAbelianGroup::order() const {
  mpz_class n = 1;
  for (const auto& d : d_) n *= d;
  return n;
}

GroupElement FiniteAbelianGroup::zero() const {
  return GroupElement(*this, std::vector<mpz_class>(rank(), 0));
}

GroupElement FiniteAbelianGroup::generator(std::size_t i) const {
  if (i >= rank()) throw precondition_error("generator: index out of range");
  std::vector<mpz_class> a(rank(), 0);
  a[i] = 1;
  return GroupElement(*this, std::move(a));
}

GroupElement FiniteAbelianGroup::element(std::vector<mpz_class> coords) const {
  return GroupElement(*this, std::move(coords));
}

std::uint64_t FiniteAbelianGroup::enumerable_order(std::uint64_t cap) const {
  const mpz_class n = order();
  if (!n.fits_ulong_p() || n.get_ui() > cap)
    throw size_cap_error("group too large to enumerate (order > cap)");
  return n.get_ui();
}

GroupElement::GroupElement(FiniteAbelianGroup g, std::vector<mpz_class> coords)
    : g_(std::move(g)), a_(std::move(coords)) {
  if (a_.size() != g_.rank())
    throw precondition_error("GroupElement: coordinate count mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a_[i].get_mpz_t(), g_.factors()[i].get_mpz_t());
    a_[i] = r;
  }
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
  if (g_ != o.g_) throw precondition_error("GroupElement: group mismatch");
  std::vector<mpz_class> a(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) a[i] = a_[i] + o.a_[i];
  return GroupElement(g_, std::move(a));
}

GroupElement GroupElement::operator-() const {
  std::vector<mpz_class> a(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) a[i] = -a_[i];
  return GroupElement(g_, std::move(a));
}

GroupElement GroupElement::times(const mpz_class& k) const {
  std::vector<mpz_class> a(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) a[i] = a_[i] * k;
  return GroupElement(g_, std::move(a));
}

bool GroupElement::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

mpz_class GroupElement::order() const {
  mpz_class ord = 1;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a_[i].get_mpz_t(), g_.factors()[i].get_mpz_t());
    mpz_class cyc = g_.factors()[i] / g;
    mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), cyc.get_mpz_t());
  }
  return ord;
}

}  // namespace spinsurg
