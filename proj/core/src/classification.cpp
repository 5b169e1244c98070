#include "chiro/classification.hpp"

#include <sstream>

#include "chiro/errors.hpp"

namespace chiro {

std::string to_string(Label label) {
  switch (label) {
    case Label::minus: return "minus";
    case Label::zero: return "zero";
    case Label::plus: return "plus";
    case Label::other: return "other";
  }
  return "other";
}

ParamPoint base_parameters() {
  return {Rational(1, 2), Rational(1, 2), Rational(1, 3)};
}

const ReferenceChirotopes& reference_chirotopes() {
  static const ReferenceChirotopes refs = [] {
    const Chirotope zero = chirotope_of(closed_form(base_parameters()));
    const Triple gap(9, 12, 13);
    return ReferenceChirotopes{flip(zero, gap, Sign::negative()), zero,
                               flip(zero, gap, Sign::positive())};
  }();
  return refs;
}

bool InequalityProfile::strict_box() const {
  const Rational zero(0);
  return s > zero && one_minus_s > zero && t > zero && one_minus_t > zero && u > zero &&
         one_minus_t_minus_u > zero && t_minus_u > zero && t_quad > zero &&
         one_minus_t_quad > zero;
}

InequalityProfile inequality_profile(const ParamPoint& p) {
  const Rational &s = p.s, &t = p.t, &u = p.u;
  const Rational one(1), two(2);

  InequalityProfile f;
  f.s = s;
  f.one_minus_s = one - s;
  f.t = t;
  f.one_minus_t = one - t;
  f.u = u;
  f.one_minus_t_minus_u = one - t - u;
  f.t_minus_u = t - u;
  f.t_quad = t * t - (one - s) * u;
  f.one_minus_t_quad = (one - t) * (one - t) - s * u;
  f.d = u * (one - two * s) * (one - two * t + t * u - s * u);
  return f;
}

DetTableReport symbolic_determinant_table() {
  const Configuration<Poly3>& x = closed_form_symbolic();
  const Poly3 s = Poly3::s(), t = Poly3::t(), u = Poly3::u();
  const Poly3 one(1), two(2);

  auto det = [&x](int i, int j, int k) { return det3(x.col(i), x.col(j), x.col(k)); };

  DetTableReport report;
  auto add = [&report, &det](std::array<int, 3> cols, std::string name, Poly3 expected) {
    Poly3 computed = det(cols[0], cols[1], cols[2]);
    report.entries.push_back({cols, std::move(name), std::move(expected), std::move(computed)});
  };

  add({2, 3, 5}, "s", s);
  add({2, 5, 4}, "1-s", one - s);
  add({1, 7, 3}, "t", t);
  add({1, 4, 7}, "1-t", one - t);
  add({1, 9, 3}, "u", u);
  add({4, 7, 9}, "1-t-u", one - t - u);
  add({3, 9, 8}, "t-u", t - u);
  add({5, 13, 7}, "s*(t^2-(1-s)u)", s * (t * t - (one - s) * u));
  add({6, 12, 8}, "(1-s)*((1-t)^2-su)", (one - s) * ((one - t) * (one - t) - s * u));
  add({9, 12, 13}, "u(1-2s)(1-2t+tu-su)",
      u * (one - two * s) * (one - two * t + t * u - s * u));
  return report;
}

bool DetTableReport::pass() const {
  for (const auto& e : entries)
    if (!e.match()) return false;
  return true;
}

Label inequality_route_label(const ParamPoint& p) {
  const InequalityProfile f = inequality_profile(p);
  if (!f.strict_box()) return Label::other;
  switch (f.d.sign().to_int()) {
    case -1: return Label::minus;
    case 0: return Label::zero;
    default: return Label::plus;
  }
}

Label chirotope_route_label(const ParamPoint& p) {
  const Chirotope chi = chirotope_of(closed_form(p));
  const ReferenceChirotopes& refs = reference_chirotopes();
  if (chi == refs.minus) return Label::minus;
  if (chi == refs.zero) return Label::zero;
  if (chi == refs.plus) return Label::plus;
  return Label::other;
}

Label classify(const ParamPoint& p, ClassifyMode mode) {
  const Label by_inequalities = inequality_route_label(p);
  if (mode == ClassifyMode::fast) return by_inequalities;

  const Label by_chirotope = chirotope_route_label(p);
  if (by_inequalities != by_chirotope) {
    std::ostringstream os;
    os << "classification routes disagree at (s,t,u)=(" << p.s << "," << p.t << "," << p.u
       << "): inequalities say " << to_string(by_inequalities) << ", chirotope says "
       << to_string(by_chirotope);
    throw internal_inconsistency_error(os.str());
  }
  return by_inequalities;
}

RegionComponent region_minus_component(const ParamPoint& p) {
  const Rational &s = p.s, &t = p.t, &u = p.u;
  const Rational zero(0), one(1), half(1, 2), two(2);

  // 0<s<1/2, 1/2<t<1, 0<u<min{1-t, (1-t)^2/s, (2t-1)/(t-s)}; denominators
  // cleared (they are positive on the component's box).
  if (zero < s && s < half && half < t && t < one && zero < u && u < one - t &&
      s * u < (one - t) * (one - t) && (t - s) * u < two * t - one)
    return RegionComponent::low_s;

  // Mirrored: 1/2<s<1, 0<t<1/2, 0<u<min{t, t^2/(1-s), (1-2t)/(s-t)}.
  if (half < s && s < one && zero < t && t < half && zero < u && u < t &&
      (one - s) * u < t * t && (s - t) * u < one - two * t)
    return RegionComponent::high_s;

  return RegionComponent::none;
}

RegionComponent region_plus_component(const ParamPoint& p) {
  const Rational &s = p.s, &t = p.t, &u = p.u;
  const Rational zero(0), one(1), half(1, 2), two(2);

  // sqrt conditions replaced by squared equivalents with positivity side
  // conditions: sqrt((1-s)u) < t  <=>  t > 0 and t^2 > (1-s)u;
  //             t < 1-sqrt(su)   <=>  1-t > 0 and (1-t)^2 > su.
  if (zero < s && s < half && zero < u && u < half &&
      (one - u) * (one - u) - (one - s) * u > zero && t > zero && t * t > (one - s) * u &&
      t * (two - u) < one - s * u)
    return RegionComponent::low_s;

  if (half < s && s < one && zero < u && u < half && (one - u) * (one - u) - s * u > zero &&
      t * (two - u) > one - s * u && one - t > zero && (one - t) * (one - t) > s * u)
    return RegionComponent::high_s;

  return RegionComponent::none;
}

SheetMembership region_zero(const ParamPoint& p) {
  const Rational &s = p.s, &t = p.t, &u = p.u;
  const Rational zero(0), one(1), half(1, 2), two(2);

  SheetMembership m;
  m.sheet_s = s == half && zero < t && t < one && zero < u && u < two * t * t &&
              u < two * (one - t) * (one - t);
  m.sheet_t = zero < s && s < one && zero < u && u < half &&
              (one - u) * (one - u) - s * u > zero && (one - u) * (one - u) - (one - s) * u > zero &&
              one - two * t + t * u - s * u == zero;
  return m;
}

const std::vector<Rational>& alt_base_excluded_values() {
  static const std::vector<Rational> values = {
      Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2),
      Rational(3)};
  return values;
}

bool alt_base_excluded(const Rational& u_prime) {
  for (const Rational& v : alt_base_excluded_values())
    if (u_prime == v) return true;
  return false;
}

AltBaseReport alt_base_report(const Rational& u_prime) {
  AltBaseReport report;
  report.u_prime = u_prime;
  report.excluded = alt_base_excluded(u_prime);

  const Chirotope base = reference_chirotopes().zero;
  const Chirotope alt =
      chirotope_of(closed_form({Rational(1, 2), Rational(1, 2), u_prime}));
  const Triple gap(9, 12, 13);

  report.sign_at_9_12_13 = alt.value(gap);
  report.equals_base = alt == base;
  for (const Triple& t : Triple::all()) {
    if (t == gap) continue;
    const Sign b = base.value(t), a = alt.value(t);
    if (b == a) continue;
    if (a.is_zero())
      report.vanished.push_back(t);
    else if (b.is_zero())
      report.appeared.push_back(t);
    else
      report.flipped.push_back(t);
  }
  return report;
}

Chirotope alt_base_chirotope(const Rational& u_prime) {
  if (alt_base_excluded(u_prime)) {
    const AltBaseReport report = alt_base_report(u_prime);
    std::ostringstream os;
    os << "u'=" << u_prime << " is one of the excluded base parameters;"
       << " degeneracy vs the base chirotope: " << report.vanished.size()
       << " extra collinear triples, " << report.flipped.size() << " sign flips, "
       << report.appeared.size() << " lost collinearities";
    throw excluded_parameter_error(os.str());
  }
  return chirotope_of(closed_form({Rational(1, 2), Rational(1, 2), u_prime}));
}

}  // namespace chiro
