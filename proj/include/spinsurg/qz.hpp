#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace spinsurg {

// An element of Q/Z, stored as the reduced canonical representative in
// [0, 1).  The denominator of the canonical representative is the order
// of the element in Q/Z.
class QZ {
 public:
  QZ() : v_(0) {}
  explicit QZ(const mpq_class& q) : v_(q) { normalize(); }
  QZ(const mpz_class& num, const mpz_class& den);
  QZ(long num, long den) : QZ(mpz_class(num), mpz_class(den)) {}

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  bool is_zero() const { return v_ == 0; }
  // Additive order in Q/Z.
  const mpz_class& order() const { return den(); }

  QZ operator+(const QZ& o) const { return QZ(v_ + o.v_); }
  QZ operator-(const QZ& o) const { return QZ(v_ - o.v_); }
  QZ operator-() const { return QZ(-v_); }
  QZ times(const mpz_class& k) const { return QZ(v_ * k); }

  bool operator==(const QZ&) const = default;

  // Canonical representative as an exact rational in [0, 1).
  const mpq_class& rep() const { return v_; }

  // "num/den" of the canonical representative; zero prints as "0/1".
  std::string str() const;
  // Accepts "a/b" or a bare integer; reduces mod 1.
  static QZ parse(const std::string& s);

 private:
  void normalize();
  mpq_class v_;
};

inline QZ operator*(const mpz_class& k, const QZ& x) { return x.times(k); }

std::ostream& operator<<(std::ostream& os, const QZ& x);

}  // namespace spinsurg
