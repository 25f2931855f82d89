#include "spinsurg/qz.hpp"

#include <ostream>

#include "spinsurg/errors.hpp"

namespace spinsurg {

QZ::QZ(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw precondition_error("QZ: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
  normalize();
}

void QZ::normalize() {
  v_.canonicalize();
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), v_.get_num().get_mpz_t(),
             v_.get_den().get_mpz_t());
  v_ -= fl;
}

std::string QZ::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

QZ QZ::parse(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return QZ(mpz_class(s), mpz_class(1));
    return QZ(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw parse_error("QZ: cannot parse '" + s + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const QZ& x) {
  return os << x.str();
}

}  // namespace spinsurg
