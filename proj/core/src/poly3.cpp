#include "chiro/poly3.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace chiro {

Poly3::Poly3(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

Poly3 Poly3::monomial(Monomial m, const Rational& coeff) {
  Poly3 p;
  if (!coeff.is_zero()) p.terms_.emplace(m, coeff);
  return p;
}

void Poly3::add_term(const Monomial& m, const Rational& coeff) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!coeff.is_zero()) terms_.emplace(m, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly3& Poly3::operator+=(const Poly3& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
  Poly3 out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term({ma.es + mb.es, ma.et + mb.et, ma.eu + mb.eu}, ca * cb);
    }
  }
  return out;
}

Poly3 operator-(const Poly3& a) {
  Poly3 out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
  return out;
}

namespace {

std::vector<Rational> powers(const Rational& base, unsigned max_exp) {
  std::vector<Rational> p(max_exp + 1, Rational(1));
  for (unsigned e = 1; e <= max_exp; ++e) p[e] = p[e - 1] * base;
  return p;
}

}  // namespace

Rational Poly3::eval(const Rational& s, const Rational& t, const Rational& u) const {
  unsigned ms = 0, mt = 0, mu = 0;
  for (const auto& [m, c] : terms_) {
    ms = std::max(ms, m.es);
    mt = std::max(mt, m.et);
    mu = std::max(mu, m.eu);
  }
  const auto ps = powers(s, ms), pt = powers(t, mt), pu = powers(u, mu);
  Rational acc;
  for (const auto& [m, c] : terms_) acc += c * ps[m.es] * pt[m.et] * pu[m.eu];
  return acc;
}

Poly3 Poly3::substitute(Var v, const Rational& value) const {
  unsigned max_exp = 0;
  for (const auto& [m, c] : terms_) {
    const unsigned e = v == Var::s ? m.es : v == Var::t ? m.et : m.eu;
    max_exp = std::max(max_exp, e);
  }
  const auto pw = powers(value, max_exp);
  Poly3 out;
  for (const auto& [m, c] : terms_) {
    Monomial reduced = m;
    unsigned e = 0;
    switch (v) {
      case Var::s: e = m.es; reduced.es = 0; break;
      case Var::t: e = m.et; reduced.et = 0; break;
      case Var::u: e = m.eu; reduced.eu = 0; break;
    }
    out.add_term(reduced, c * pw[e]);
  }
  return out;
}

std::string Poly3::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c.sign() == Sign::negative();
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const Rational mag = c.abs();
    std::string vars;
    auto append_var = [&vars](const char* name, unsigned e) {
      if (e == 0) return;
      if (!vars.empty()) vars += "*";
      vars += name;
      if (e > 1) vars += "^" + std::to_string(e);
    };
    append_var("s", m.es);
    append_var("t", m.et);
    append_var("u", m.eu);
    if (vars.empty()) {
      os << mag.str();
    } else if (mag == Rational(1)) {
      os << vars;
    } else {
      os << mag.str() << "*" << vars;
    }
  }
  return os.str();
}

}  // namespace chiro
