#include "chiro/chirotope.hpp"

#include <atomic>
#include <stdexcept>
#include <utility>

#include "chiro/errors.hpp"
#include "chiro/parallel.hpp"

namespace chiro {

Triple::Triple(int i, int j, int k) : i(i), j(j), k(k) {
  if (i < 1 || !(i < j) || !(j < k) || k > kPoints)
    throw std::invalid_argument("triple must satisfy 1 <= i < j < k <= 13");
}

int Triple::rank() const {
  auto choose2 = [](int m) { return m * (m - 1) / 2; };
  int r = 0;
  for (int a = 1; a < i; ++a) r += choose2(kPoints - a);
  for (int b = i + 1; b < j; ++b) r += kPoints - b;
  return r + (k - j - 1);
}

const std::vector<Triple>& Triple::all() {
  static const std::vector<Triple> table = [] {
    std::vector<Triple> out;
    out.reserve(kTriples);
    for (int i = 1; i <= kPoints; ++i)
      for (int j = i + 1; j <= kPoints; ++j)
        for (int k = j + 1; k <= kPoints; ++k) out.emplace_back(i, j, k);
    return out;
  }();
  return table;
}

Sign Chirotope::eval(int i, int j, int k) const {
  if (i < 1 || i > kPoints || j < 1 || j > kPoints || k < 1 || k > kPoints)
    throw std::out_of_range("chirotope index out of range");
  if (i == j || j == k || i == k) return Sign(0);
  int parity = 1;
  if (i > j) { std::swap(i, j); parity = -parity; }
  if (j > k) { std::swap(j, k); parity = -parity; }
  if (i > j) { std::swap(i, j); parity = -parity; }
  return Sign(parity * values_[static_cast<std::size_t>(Triple(i, j, k).rank())]);
}

bool Chirotope::not_identically_zero() const {
  for (std::int8_t v : values_)
    if (v != 0) return true;
  return false;
}

Chirotope Chirotope::from_raw(const std::array<std::int8_t, kTriples>& values) {
  Chirotope chi;
  chi.values_ = values;
  return chi;
}

Chirotope chirotope_of(const Configuration<Rational>& c) {
  // Scale each column by the (positive) common denominator of its entries;
  // positive column scalars never change a determinant sign, and integer
  // determinants are considerably cheaper than rational ones.
  std::array<Vec3<mpz_class>, kPoints> cols;
  for (int l = 1; l <= kPoints; ++l) {
    const Vec3<Rational>& v = c.col(l);
    const mpz_class dx = v.x.den(), dy = v.y.den(), dz = v.z.den();
    mpz_class m;
    mpz_lcm(m.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), dz.get_mpz_t());
    cols[static_cast<std::size_t>(l - 1)] = {v.x.num() * (m / dx), v.y.num() * (m / dy),
                                             v.z.num() * (m / dz)};
  }

  std::array<std::int8_t, kTriples> values{};
  bool any_nonzero = false;
  for (const Triple& t : Triple::all()) {
    const mpz_class d = det3(cols[static_cast<std::size_t>(t.i - 1)],
                             cols[static_cast<std::size_t>(t.j - 1)],
                             cols[static_cast<std::size_t>(t.k - 1)]);
    const int s = sgn(d);
    values[static_cast<std::size_t>(t.rank())] = static_cast<std::int8_t>(s);
    any_nonzero |= s != 0;
  }
  if (!any_nonzero)
    throw identically_zero_error("all 286 triple determinants vanish: configuration has rank < 3");
  return Chirotope::from_raw(values);
}

Chirotope flip(const Chirotope& chi, const Triple& t, Sign sign) {
  auto values = chi.raw();
  values[static_cast<std::size_t>(t.rank())] = sign.value;
  return Chirotope::from_raw(values);
}

Chirotope negated(const Chirotope& chi) {
  auto values = chi.raw();
  for (auto& v : values) v = static_cast<std::int8_t>(-v);
  return Chirotope::from_raw(values);
}

bool equal_up_to_sign(const Chirotope& a, const Chirotope& b) {
  return a == b || a == negated(b);
}

std::vector<Triple> zero_set(const Chirotope& chi) {
  std::vector<Triple> out;
  for (const Triple& t : Triple::all())
    if (chi.value(t).is_zero()) out.push_back(t);
  return out;
}

bool alternation_check(const Chirotope& chi) {
  for (int i = 1; i <= kPoints; ++i) {
    for (int j = 1; j <= kPoints; ++j) {
      for (int k = 1; k <= kPoints; ++k) {
        const Sign got = chi.eval(i, j, k);
        if (i == j || j == k || i == k) {
          if (!got.is_zero()) return false;
          continue;
        }
        int a = i, b = j, c = k, parity = 1;
        if (a > b) { std::swap(a, b); parity = -parity; }
        if (b > c) { std::swap(b, c); parity = -parity; }
        if (a > b) { std::swap(a, b); parity = -parity; }
        const Sign expected = parity == 1 ? chi.value(Triple(a, b, c)) : -chi.value(Triple(a, b, c));
        if (got != expected) return false;
      }
    }
  }
  return true;
}

namespace {

// Full 13^3 sign cube so the axiom-3 loop is pure table lookups.
struct SignCube {
  std::int8_t v[kPoints][kPoints][kPoints];

  explicit SignCube(const Chirotope& chi) {
    for (int i = 1; i <= kPoints; ++i)
      for (int j = 1; j <= kPoints; ++j)
        for (int k = 1; k <= kPoints; ++k) v[i - 1][j - 1][k - 1] = chi.eval(i, j, k).value;
  }
};

// Violation test for one six-tuple, all indices 0-based.
inline bool violates(const SignCube& cube, int i1, int i2, int i3, int j1, int j2, int j3) {
  const int conclusion = cube.v[i1][i2][i3] * cube.v[j1][j2][j3];
  if (conclusion >= 0) return false;
  if (cube.v[j1][i2][i3] * cube.v[i1][j2][j3] < 0) return false;
  if (cube.v[j2][i2][i3] * cube.v[j1][i1][j3] < 0) return false;
  if (cube.v[j3][i2][i3] * cube.v[j1][j2][i1] < 0) return false;
  return true;
}

constexpr std::int64_t kITuples = kPoints * kPoints * kPoints;

}  // namespace

Axiom3Report axiom3_check(const Chirotope& chi) {
  const SignCube cube(chi);

  const int chunks = plan_chunks(kITuples);
  std::vector<std::vector<std::array<int, 6>>> buckets(static_cast<std::size_t>(chunks));
  run_chunks(kITuples, chunks, [&](std::int64_t begin, std::int64_t end, int chunk) {
    auto& local = buckets[static_cast<std::size_t>(chunk)];
    for (std::int64_t it = begin; it < end; ++it) {
      const int i1 = static_cast<int>(it / (kPoints * kPoints));
      const int i2 = static_cast<int>(it / kPoints % kPoints);
      const int i3 = static_cast<int>(it % kPoints);
      for (int j1 = 0; j1 < kPoints; ++j1)
        for (int j2 = 0; j2 < kPoints; ++j2)
          for (int j3 = 0; j3 < kPoints; ++j3)
            if (violates(cube, i1, i2, i3, j1, j2, j3))
              local.push_back({i1 + 1, i2 + 1, i3 + 1, j1 + 1, j2 + 1, j3 + 1});
    }
  });

  Axiom3Report report;
  for (const auto& bucket : buckets)
    report.violations.insert(report.violations.end(), bucket.begin(), bucket.end());
  return report;
}

bool axiom3_has_violation(const Chirotope& chi) {
  const SignCube cube(chi);

  std::atomic<bool> found{false};
  const int chunks = plan_chunks(kITuples);
  run_chunks(kITuples, chunks, [&](std::int64_t begin, std::int64_t end, int) {
    for (std::int64_t it = begin; it < end && !found.load(std::memory_order_relaxed); ++it) {
      const int i1 = static_cast<int>(it / (kPoints * kPoints));
      const int i2 = static_cast<int>(it / kPoints % kPoints);
      const int i3 = static_cast<int>(it % kPoints);
      for (int j1 = 0; j1 < kPoints; ++j1)
        for (int j2 = 0; j2 < kPoints; ++j2)
          for (int j3 = 0; j3 < kPoints; ++j3)
            if (violates(cube, i1, i2, i3, j1, j2, j3)) {
              found.store(true, std::memory_order_relaxed);
              return;
            }
    }
  });
  return found.load();
}

}  // namespace chiro
