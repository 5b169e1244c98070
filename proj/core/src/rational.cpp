#include "chiro/rational.hpp"

#include <cctype>

#include "chiro/errors.hpp"

namespace chiro {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw parse_error("rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (sgn(den) == 0) throw parse_error("rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw parse_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
  Rational r = a;
  r /= b;
  return r;
}

namespace {

std::string take_digits(const std::string& text, std::size_t& pos) {
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) throw parse_error("expected digits in rational: '" + text + "'");
  return text.substr(start, pos - start);
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::string integral = take_digits(text, pos);

  mpz_class num, den;
  if (pos == text.size()) {
    num = mpz_class(integral, 10);
    den = 1;
  } else if (text[pos] == '/') {
    ++pos;
    const std::string denominator = take_digits(text, pos);
    if (pos != text.size()) throw parse_error("trailing characters in rational: '" + text + "'");
    num = mpz_class(integral, 10);
    den = mpz_class(denominator, 10);
    if (sgn(den) == 0) throw parse_error("zero denominator: '" + text + "'");
  } else if (text[pos] == '.') {
    ++pos;
    const std::string fraction = take_digits(text, pos);
    if (pos != text.size()) throw parse_error("trailing characters in rational: '" + text + "'");
    if (fraction.size() > 12)
      throw parse_error("decimal literal limited to 12 fractional digits: '" + text + "'");
    num = mpz_class(integral + fraction, 10);
    den = 1;
    for (std::size_t i = 0; i < fraction.size(); ++i) den *= 10;
  } else {
    throw parse_error("malformed rational: '" + text + "'");
  }

  if (negative) num = -num;
  return Rational(num, den);
}

}  // namespace chiro
