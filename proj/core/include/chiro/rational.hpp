#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "chiro/sign.hpp"

namespace chiro {

// Arbitrary-precision rational, always in canonical form: denominator > 0 and
// gcd(numerator, denominator) == 1. Equality is structural on canonical form,
// which coincides with value equality. All arithmetic is exact.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q);

  // Accepts "p", "p/q" and decimal literals with at most 12 fractional
  // digits ("0.25" == 1/4). Throws parse_error otherwise.
  static Rational parse(const std::string& text);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  Sign sign() const { return Sign(sgn(q_)); }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  // "p/q", or plain "p" when the denominator is 1.
  std::string str() const { return q_.get_str(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.str();
}

}  // namespace chiro
