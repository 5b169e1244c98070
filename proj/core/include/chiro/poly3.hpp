#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <string>

#include "chiro/rational.hpp"

namespace chiro {

// Exponent triple of a monomial s^es * t^et * u^eu. Ordered lexicographically
// by (es, et, eu), which fixes the serialization order.
struct Monomial {
  unsigned es = 0;
  unsigned et = 0;
  unsigned eu = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Exact polynomial in the three parameters s, t, u over Rational. Zero
// coefficients are never stored; the zero polynomial is the empty term map.
class Poly3 {
 public:
  enum class Var { s, t, u };

  Poly3() = default;
  Poly3(const Rational& constant);  // NOLINT: implicit by design
  Poly3(long constant) : Poly3(Rational(constant)) {}

  static Poly3 s() { return monomial({1, 0, 0}, 1); }
  static Poly3 t() { return monomial({0, 1, 0}, 1); }
  static Poly3 u() { return monomial({0, 0, 1}, 1); }
  static Poly3 monomial(Monomial m, const Rational& coeff);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Poly3& operator+=(const Poly3& o);
  Poly3& operator-=(const Poly3& o);
  Poly3& operator*=(const Poly3& o) { return *this = *this * o; }

  friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
  friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
  friend Poly3 operator*(const Poly3& a, const Poly3& b);
  friend Poly3 operator-(const Poly3& a);
  friend bool operator==(const Poly3& a, const Poly3& b) { return a.terms_ == b.terms_; }

  Rational eval(const Rational& s, const Rational& t, const Rational& u) const;

  // Partial evaluation: substitutes one variable, returns a polynomial in the
  // remaining two.
  Poly3 substitute(Var v, const Rational& value) const;

  // Sorted term list, e.g. "1 - 2*t + t*u - s*u". The zero polynomial is "0".
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& coeff);

  std::map<Monomial, Rational> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly3& p) {
  return os << p.str();
}

}  // namespace chiro
