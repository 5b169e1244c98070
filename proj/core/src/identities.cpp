#include "chiro/identities.hpp"

namespace chiro {

Gp3Check gp3_identity_check(const std::array<Vec3<Rational>, 3>& x,
                            const std::array<Vec3<Rational>, 3>& y) {
  Gp3Check out;
  out.lhs = det3(x[0], x[1], x[2]) * det3(y[0], y[1], y[2]);
  Rational rhs;
  for (int k = 0; k < 3; ++k) {
    std::array<Vec3<Rational>, 3> patched = y;
    patched[k] = x[0];
    rhs += det3(y[k], x[1], x[2]) * det3(patched[0], patched[1], patched[2]);
  }
  out.rhs = rhs;
  return out;
}

std::vector<ExpansionIdentity> expansion_identities() {
  const Poly3 s = Poly3::s(), t = Poly3::t(), u = Poly3::u();
  const Poly3 one(1), two(2);
  const Poly3 pivot = one - two * t + t * u - s * u;  // 1-2t+tu-su

  std::vector<ExpansionIdentity> out;
  out.push_back({"(2-u)(2t-1)",
                 (two - u) * (two * t - one),
                 -(two * pivot) + u * (one - two * s)});
  out.push_back({"t^2-(1-s)u",
                 t * t - (one - s) * u,
                 -pivot + (one - t) * (one - t - u)});
  out.push_back({"(1-t)^2-su",
                 (one - t) * (one - t) - s * u,
                 pivot + t * (t - u)});
  return out;
}

bool expansion_identities_hold() {
  for (const auto& id : expansion_identities()) {
    if (!id.equal()) return false;
  }
  return true;
}

}  // namespace chiro
