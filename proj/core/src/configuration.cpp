#include "chiro/configuration.hpp"

namespace chiro {

Configuration<Rational> closed_form(const ParamPoint& p) {
  const Rational &s = p.s, &t = p.t, &u = p.u;
  const Rational one(1);

  Configuration<Rational> c;
  c.col(1) = {1, 0, 0};
  c.col(2) = {0, 1, 0};
  c.col(3) = {0, 0, 1};
  c.col(4) = {1, 1, 1};
  c.col(5) = {s, 0, 1};
  c.col(6) = {s, 1, 1};
  c.col(7) = {0, t, 1};
  c.col(8) = {1, t, 1};
  c.col(9) = {1, u, 0};
  c.col(10) = {s * t, t, one - s * u};
  c.col(11) = {s + t - u - s * t + s * u, t - u + s * u, one - u + s * u};
  c.col(12) = {s + t - s * t - s * s * u, t, one - s * u};
  c.col(13) = {s * (t - u + s * u), t - u + s * u, one - u + s * u};
  return c;
}

const Configuration<Poly3>& closed_form_symbolic() {
  static const Configuration<Poly3> cached = [] {
    const Poly3 s = Poly3::s(), t = Poly3::t(), u = Poly3::u();
    const Poly3 zero(0), one(1);

    Configuration<Poly3> c;
    c.col(1) = {one, zero, zero};
    c.col(2) = {zero, one, zero};
    c.col(3) = {zero, zero, one};
    c.col(4) = {one, one, one};
    c.col(5) = {s, zero, one};
    c.col(6) = {s, one, one};
    c.col(7) = {zero, t, one};
    c.col(8) = {one, t, one};
    c.col(9) = {one, u, zero};
    c.col(10) = {s * t, t, one - s * u};
    c.col(11) = {s + t - u - s * t + s * u, t - u + s * u, one - u + s * u};
    c.col(12) = {s + t - s * t - s * s * u, t, one - s * u};
    c.col(13) = {s * (t - u + s * u), t - u + s * u, one - u + s * u};
    return c;
  }();
  return cached;
}

Configuration<Rational> eval_at(const Configuration<Poly3>& c, const ParamPoint& p) {
  Configuration<Rational> out;
  for (int l = 1; l <= kPoints; ++l) {
    const auto& v = c.col(l);
    out.col(l) = {v.x.eval(p.s, p.t, p.u), v.y.eval(p.s, p.t, p.u), v.z.eval(p.s, p.t, p.u)};
  }
  return out;
}

bool SequenceResult::has_duplicate(int i, int j) const {
  for (const auto& issue : issues) {
    if (issue.kind == SequenceIssue::Kind::duplicate_point && issue.i == i && issue.j == j)
      return true;
  }
  return false;
}

SequenceResult construct_sequence(const ParamPoint& p) {
  SequenceResult r;
  auto& c = r.config;
  auto set = [&](int label, Vec3<Rational> v) {
    if (is_zero(v)) r.issues.push_back({SequenceIssue::Kind::degenerate_step, label, 0});
    c.col(label) = std::move(v);
  };

  set(1, {1, 0, 0});
  set(2, {0, 1, 0});
  set(3, {0, 0, 1});
  set(4, {1, 1, 1});
  set(5, p.s * c.col(1) + c.col(3));
  set(6, cross(cross(c.col(1), c.col(4)), cross(c.col(2), c.col(5))));
  set(7, p.t * c.col(2) + c.col(3));
  set(8, cross(cross(c.col(1), c.col(7)), cross(c.col(2), c.col(4))));
  set(9, p.u * c.col(2) + c.col(1));
  set(10, cross(cross(c.col(7), c.col(9)), cross(c.col(3), c.col(6))));
  set(11, cross(cross(c.col(4), c.col(5)), cross(c.col(8), c.col(9))));
  set(12, cross(cross(c.col(1), c.col(10)), cross(c.col(4), c.col(5))));
  set(13, cross(cross(c.col(3), c.col(6)), cross(c.col(1), c.col(11))));

  for (int i = 1; i <= kPoints; ++i) {
    for (int j = i + 1; j <= kPoints; ++j) {
      if (is_zero(c.col(i)) || is_zero(c.col(j))) continue;
      if (is_zero(cross(c.col(i), c.col(j))))
        r.issues.push_back({SequenceIssue::Kind::duplicate_point, i, j});
    }
  }
  return r;
}

AgreementReport agreement_check(const ParamPoint& p) {
  const Configuration<Rational> reference = closed_form(p);
  const SequenceResult seq = construct_sequence(p);

  AgreementReport report;
  report.all_proportional = true;
  report.all_positive = true;
  for (int l = 1; l <= kPoints; ++l) {
    const Vec3<Rational>& a = seq.config.col(l);
    const Vec3<Rational>& b = reference.col(l);
    ColumnAgreement col;
    col.label = l;
    if (is_zero(b)) {
      col.proportional = is_zero(a);
      col.lambda = Rational(0);
    } else {
      const Rational* bn = !b.x.is_zero() ? &b.x : !b.y.is_zero() ? &b.y : &b.z;
      const Rational* an = bn == &b.x ? &a.x : bn == &b.y ? &a.y : &a.z;
      col.lambda = *an / *bn;
      col.proportional = a == col.lambda * b;
    }
    col.exact = col.proportional && col.lambda == Rational(1);
    if (!col.proportional) report.all_proportional = false;
    if (!(col.lambda > Rational(0))) report.all_positive = false;
    report.columns.push_back(col);
  }
  if (!report.all_proportional) report.all_positive = false;
  return report;
}

std::vector<AffinePoint> affine_image(const Configuration<Rational>& c) {
  std::vector<AffinePoint> out;
  out.reserve(kPoints);
  for (int l = 1; l <= kPoints; ++l) {
    const auto& v = c.col(l);
    AffinePoint pt;
    pt.label = l;
    if (v.z.is_zero()) {
      pt.at_infinity = true;
      pt.x = v.x;
      pt.y = v.y;
    } else {
      pt.at_infinity = false;
      pt.x = v.x / v.z;
      pt.y = v.y / v.z;
    }
    out.push_back(pt);
  }
  return out;
}

}  // namespace chiro
