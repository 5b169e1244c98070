#pragma once

#include <array>
#include <string>
#include <vector>

#include "chiro/chirotope.hpp"
#include "chiro/configuration.hpp"
#include "chiro/poly3.hpp"

namespace chiro {

// Which of the three reference chirotopes X(s,t,u) realizes, if any.
enum class Label { minus, zero, plus, other };

std::string to_string(Label label);

// The chirotopes of the base configuration X(1/2,1/2,1/3) and its two flips
// at (9,12,13). Built once.
struct ReferenceChirotopes {
  Chirotope minus;
  Chirotope zero;
  Chirotope plus;
};

const ReferenceChirotopes& reference_chirotopes();
ParamPoint base_parameters();  // (1/2, 1/2, 1/3)

// The ten sign-system quantities, each an exact determinant of the closed
// form (the two quadratics carry the positive factors s resp. 1-s in their
// determinant identity; see symbolic_determinant_table).
struct InequalityProfile {
  Rational s;                    // det(x2,x3,x5)
  Rational one_minus_s;          // det(x2,x5,x4)
  Rational t;                    // det(x1,x7,x3)
  Rational one_minus_t;          // det(x1,x4,x7)
  Rational u;                    // det(x1,x9,x3)
  Rational one_minus_t_minus_u;  // det(x4,x7,x9)
  Rational t_minus_u;            // det(x3,x9,x8)
  Rational t_quad;               // t^2-(1-s)u;     s * t_quad = det(x5,x13,x7)
  Rational one_minus_t_quad;     // (1-t)^2-su; (1-s) * this   = det(x6,x12,x8)
  Rational d;                    // u(1-2s)(1-2t+tu-su) = det(x9,x12,x13)

  // All nine box/strictness quantities positive; the label is then sgn(d).
  bool strict_box() const;
};

InequalityProfile inequality_profile(const ParamPoint& p);

// Certifies, over Poly3, that the ten determinants of the symbolic closed
// form equal their closed expressions. Holds for all parameters at once.
// Columns are kept in determinant order, which is not always sorted.
struct DetTableEntry {
  std::array<int, 3> columns;
  std::string expected_str;
  Poly3 expected;
  Poly3 computed;
  bool match() const { return expected == computed; }
};

struct DetTableReport {
  std::vector<DetTableEntry> entries;
  bool pass() const;
};

DetTableReport symbolic_determinant_table();

// checked: run both the inequality route and the full 286-determinant
// chirotope comparison and require agreement (internal_inconsistency_error
// otherwise). fast: inequality route only, for explicitly requested bulk use.
enum class ClassifyMode { checked, fast };

Label inequality_route_label(const ParamPoint& p);
Label chirotope_route_label(const ParamPoint& p);
Label classify(const ParamPoint& p, ClassifyMode mode = ClassifyMode::checked);

// Region membership per the two-component descriptions. low_s is the
// component with s < 1/2, high_s the mirrored one with s > 1/2.
enum class RegionComponent { none, low_s, high_s };

RegionComponent region_minus_component(const ParamPoint& p);
RegionComponent region_plus_component(const ParamPoint& p);
inline bool region_minus(const ParamPoint& p) { return region_minus_component(p) != RegionComponent::none; }
inline bool region_plus(const ParamPoint& p) { return region_plus_component(p) != RegionComponent::none; }

// The two sheets of the label-zero region: sheet_s is cut out by 1-2s = 0,
// sheet_t by 1-2t+tu-su = 0. Their intersection is s = t = 1/2, 0 < u < 1/2.
struct SheetMembership {
  bool sheet_s = false;
  bool sheet_t = false;
};

SheetMembership region_zero(const ParamPoint& p);

// Alternative base configurations X(1/2,1/2,u'). The seven excluded values
// are rejected by alt_base_chirotope; alt_base_report is total and describes
// exactly how the chirotope differs from the base one (the concrete
// degeneracy an excluded value triggers).
const std::vector<Rational>& alt_base_excluded_values();
bool alt_base_excluded(const Rational& u_prime);

struct AltBaseReport {
  Rational u_prime;
  bool excluded = false;
  bool equals_base = false;
  Sign sign_at_9_12_13;
  std::vector<Triple> vanished;  // nonzero in base, zero at u' (excl. (9,12,13))
  std::vector<Triple> appeared;  // zero in base, nonzero at u' (excl. (9,12,13))
  std::vector<Triple> flipped;   // opposite nonzero signs      (excl. (9,12,13))
};

AltBaseReport alt_base_report(const Rational& u_prime);
Chirotope alt_base_chirotope(const Rational& u_prime);  // throws excluded_parameter_error

}  // namespace chiro
