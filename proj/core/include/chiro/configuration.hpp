#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "chiro/poly3.hpp"
#include "chiro/rational.hpp"
#include "chiro/vec3.hpp"

namespace chiro {

inline constexpr int kPoints = 13;

// A point (s, t, u) in parameter space. Region constraints are checked by the
// classification module, not here.
struct ParamPoint {
  Rational s;
  Rational t;
  Rational u;

  bool operator==(const ParamPoint&) const = default;
};

// Ordered 13-tuple of column vectors, labeled 1..13.
template <typename S>
struct Configuration {
  std::array<Vec3<S>, kPoints> columns{};

  const Vec3<S>& col(int label) const {
    if (label < 1 || label > kPoints) throw std::out_of_range("column label out of range");
    return columns[static_cast<std::size_t>(label - 1)];
  }
  Vec3<S>& col(int label) {
    if (label < 1 || label > kPoints) throw std::out_of_range("column label out of range");
    return columns[static_cast<std::size_t>(label - 1)];
  }

  bool operator==(const Configuration&) const = default;
};

// The closed-form matrix X(s,t,u), columns exactly as written out.
Configuration<Rational> closed_form(const ParamPoint& p);

// The same matrix with entries read as polynomials in s, t, u.
const Configuration<Poly3>& closed_form_symbolic();

Configuration<Rational> eval_at(const Configuration<Poly3>& c, const ParamPoint& p);

// Issues reported by the join/meet construction sequence. Degenerate
// parameters are reportable, not unrepresentable: callers probe boundary
// slices deliberately.
struct SequenceIssue {
  enum class Kind { degenerate_step, duplicate_point };
  Kind kind;
  int i = 0;
  int j = 0;  // second label for duplicate_point

  bool operator==(const SequenceIssue&) const = default;
};

struct SequenceResult {
  Configuration<Rational> config;
  std::vector<SequenceIssue> issues;

  bool clean() const { return issues.empty(); }
  bool has_duplicate(int i, int j) const;
};

// Executes the 13 construction steps literally; joins and meets are both
// cross products, scalar factors are kept, never normalized away.
SequenceResult construct_sequence(const ParamPoint& p);

// Columnwise comparison of the construction sequence against the closed form.
// sequence_col = lambda * closed_form_col; chirotopes agree iff all lambda > 0.
struct ColumnAgreement {
  int label = 0;
  bool proportional = false;  // false means Mismatch at this column
  bool exact = false;         // lambda == 1
  Rational lambda;
};

struct AgreementReport {
  std::vector<ColumnAgreement> columns;
  bool all_proportional = false;
  bool all_positive = false;

  bool pass() const { return all_proportional && all_positive; }
};

AgreementReport agreement_check(const ParamPoint& p);

// Affine image of one column: finite (x, y) when the last coordinate is
// nonzero, otherwise a direction (x, y) at infinity.
struct AffinePoint {
  int label = 0;
  bool at_infinity = false;
  Rational x;
  Rational y;

  bool operator==(const AffinePoint&) const = default;
};

std::vector<AffinePoint> affine_image(const Configuration<Rational>& c);

}  // namespace chiro
