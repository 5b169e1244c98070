#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "chiro/configuration.hpp"
#include "chiro/sign.hpp"

namespace chiro {

inline constexpr int kTriples = 286;  // C(13,3)

// Sorted index triple from E = {1,...,13}.
struct Triple {
  int i;
  int j;
  int k;

  Triple(int i, int j, int k);  // validates 1 <= i < j < k <= 13

  // Position in lexicographic order over all sorted triples, 0..285.
  int rank() const;
  static const std::vector<Triple>& all();  // lexicographic, indexed by rank

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Sign map on the 286 sorted triples; the alternating extension to all of E^3
// is provided by eval(). Stored as a dense array indexed by Triple::rank so
// the axiom-3 loop gets O(1) access.
class Chirotope {
 public:
  Sign value(const Triple& t) const { return Sign(values_[static_cast<std::size_t>(t.rank())]); }

  // Alternating extension: 0 on repeated indices, otherwise the stored sign
  // times the parity of the permutation sorting (i, j, k).
  Sign eval(int i, int j, int k) const;

  bool not_identically_zero() const;

  bool operator==(const Chirotope&) const = default;

  const std::array<std::int8_t, kTriples>& raw() const { return values_; }
  static Chirotope from_raw(const std::array<std::int8_t, kTriples>& values);

 private:
  std::array<std::int8_t, kTriples> values_{};
};

// chi_X(i,j,k) = sgn det(x_i, x_j, x_k) on sorted triples. Throws
// identically_zero_error when every determinant vanishes (rank < 3).
Chirotope chirotope_of(const Configuration<Rational>& c);

// Copy with the value at one sorted triple replaced.
Chirotope flip(const Chirotope& chi, const Triple& t, Sign sign);

Chirotope negated(const Chirotope& chi);

// a == b or a == -b (a global negation realizes the same structure).
bool equal_up_to_sign(const Chirotope& a, const Chirotope& b);

std::vector<Triple> zero_set(const Chirotope& chi);

// Verifies eval() against the stored sorted values over all of E^3.
bool alternation_check(const Chirotope& chi);

// Exhaustive check of the exchange axiom over all 13^6 six-tuples
// (i1,i2,i3,j1,j2,j3): whenever chi(j_k,i2,i3) * chi(j1,..,i1 in slot k,..,j3)
// >= 0 for k = 1,2,3, then chi(i1,i2,i3) * chi(j1,j2,j3) >= 0. Violations are
// returned in iteration order, independent of thread count.
struct Axiom3Report {
  std::vector<std::array<int, 6>> violations;
  bool pass() const { return violations.empty(); }
};

Axiom3Report axiom3_check(const Chirotope& chi);

// Early-exit variant used by search loops; agrees with axiom3_check().pass().
bool axiom3_has_violation(const Chirotope& chi);

}  // namespace chiro
