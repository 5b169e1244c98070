#pragma once

#include <array>
#include <string>
#include <vector>

#include "chiro/poly3.hpp"
#include "chiro/rational.hpp"
#include "chiro/vec3.hpp"

namespace chiro {

// Both sides of the rank-3 determinant expansion identity
//   det(x1,x2,x3) * det(y1,y2,y3)
//     = sum_k det(y_k,x2,x3) * det(y1,..,x1 in slot k,..,y3).
// A mismatch would indicate an arithmetic bug and is surfaced, never ignored.
struct Gp3Check {
  Rational lhs;
  Rational rhs;
  bool equal() const { return lhs == rhs; }
};

Gp3Check gp3_identity_check(const std::array<Vec3<Rational>, 3>& x,
                            const std::array<Vec3<Rational>, 3>& y);

// The three product expansions tying the sign-system polynomials together:
//   (2-u)(2t-1)  == -2(1-2t+tu-su) + u(1-2s)
//   t^2-(1-s)u   == -(1-2t+tu-su) + (1-t)(1-t-u)
//   (1-t)^2-su   ==  (1-2t+tu-su) + t(t-u)
// Each is certified by expanding both sides over Poly3 and comparing
// coefficientwise, so it holds for all parameter values at once.
struct ExpansionIdentity {
  std::string name;  // the left-hand side, e.g. "(2-u)(2t-1)"
  Poly3 lhs;
  Poly3 rhs;
  bool equal() const { return lhs == rhs; }
};

std::vector<ExpansionIdentity> expansion_identities();
bool expansion_identities_hold();

}  // namespace chiro
