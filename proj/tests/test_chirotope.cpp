#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "chiro/chirotope.hpp"
#include "chiro/classification.hpp"
#include "chiro/errors.hpp"
#include "chiro/io.hpp"
#include "helpers.hpp"

using namespace chiro;
using chiro::testing::random_vec;

namespace {

const ParamPoint kBase{Rational(1, 2), Rational(1, 2), Rational(1, 3)};

Configuration<Rational> random_configuration(std::mt19937_64& rng) {
  Configuration<Rational> c;
  for (int l = 1; l <= kPoints; ++l) c.col(l) = random_vec(rng);
  return c;
}

// Independent oracle: per-triple rational determinant signs, no scaling path.
Sign det_sign(const Configuration<Rational>& c, const Triple& t) {
  return det3(c.col(t.i), c.col(t.j), c.col(t.k)).sign();
}

}  // namespace

TEST_CASE("triple ranking is the lexicographic enumeration") {
  CHECK(Triple(1, 2, 3).rank() == 0);
  CHECK(Triple(1, 2, 13).rank() == 10);
  CHECK(Triple(1, 3, 4).rank() == 11);
  CHECK(Triple(11, 12, 13).rank() == 285);
  const auto& all = Triple::all();
  for (int r = 0; r < kTriples; ++r) CHECK(all[static_cast<std::size_t>(r)].rank() == r);
  CHECK_THROWS_AS(Triple(2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(Triple(3, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(Triple(0, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Triple(12, 13, 14), std::invalid_argument);
}

TEST_CASE("chirotope of the base configuration") {
  const Chirotope chi = chirotope_of(closed_form(kBase));
  CHECK(chi.value(Triple(1, 2, 3)) == Sign::positive());
  CHECK(chi.value(Triple(9, 12, 13)) == Sign::zero());
  CHECK(chi.value(Triple(2, 3, 5)) == Sign::positive());
}

TEST_CASE("chirotope_of matches the plain determinant-sign oracle") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 10; ++round) {
    Configuration<Rational> c = random_configuration(rng);
    Chirotope chi;
    try {
      chi = chirotope_of(c);
    } catch (const identically_zero_error&) {
      continue;
    }
    for (const Triple& t : Triple::all()) CHECK(chi.value(t) == det_sign(c, t));
  }
}

TEST_CASE("identically zero configurations are rejected") {
  Configuration<Rational> rank1;
  for (int l = 1; l <= kPoints; ++l) rank1.col(l) = {1, 2, 3};
  CHECK_THROWS_AS(chirotope_of(rank1), identically_zero_error);

  Configuration<Rational> rank2;
  for (int l = 1; l <= kPoints; ++l) rank2.col(l) = {Rational(l), Rational(2 * l + 1), 0};
  CHECK_THROWS_AS(chirotope_of(rank2), identically_zero_error);
}

TEST_CASE("eval is the alternating extension") {
  const Chirotope chi = chirotope_of(closed_form(kBase));
  CHECK(chi.eval(2, 1, 3) == -chi.value(Triple(1, 2, 3)));
  CHECK(chi.eval(1, 1, 5) == Sign::zero());
  CHECK(chi.eval(3, 1, 2) == chi.value(Triple(1, 2, 3)));
  CHECK_THROWS_AS(chi.eval(0, 1, 2), std::out_of_range);
  CHECK_THROWS_AS(chi.eval(1, 2, 14), std::out_of_range);

  CHECK(alternation_check(chi));

  // all six permutations of a few triples
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const int parities[6] = {1, -1, -1, 1, 1, -1};
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> pick(0, kTriples - 1);
  for (int round = 0; round < 50; ++round) {
    const Triple t = Triple::all()[static_cast<std::size_t>(pick(rng))];
    const int idx[3] = {t.i, t.j, t.k};
    for (int p = 0; p < 6; ++p) {
      const Sign expected = parities[p] == 1 ? chi.value(t) : -chi.value(t);
      CHECK(chi.eval(idx[perms[p][0]], idx[perms[p][1]], idx[perms[p][2]]) == expected);
    }
  }
}

TEST_CASE("flip") {
  const Chirotope chi = chirotope_of(closed_form(kBase));
  const Triple gap(9, 12, 13);

  const Chirotope plus = flip(chi, gap, Sign::positive());
  CHECK(plus.value(gap) == Sign::positive());
  CHECK(flip(chi, gap, Sign::zero()) == chi);  // value there is already 0
  CHECK(flip(plus, gap, chi.value(gap)) == chi);

  int differing = 0;
  for (const Triple& t : Triple::all())
    if (plus.value(t) != chi.value(t)) ++differing;
  CHECK(differing == 1);
}

TEST_CASE("equal_up_to_sign") {
  const Chirotope chi = chirotope_of(closed_form(kBase));
  CHECK(equal_up_to_sign(chi, chi));
  CHECK(equal_up_to_sign(chi, negated(chi)));
  const auto& refs = reference_chirotopes();
  CHECK_FALSE(equal_up_to_sign(refs.minus, refs.plus));
}

TEST_CASE("zero set of the base chirotope") {
  const Chirotope chi = chirotope_of(closed_form(kBase));
  const auto zeros = zero_set(chi);
  const std::set<Triple> zero_lookup(zeros.begin(), zeros.end());

  // incidences forced by the construction, plus the base degeneracies and
  // the (9,12,13) collinearity special to s = 1/2
  const Triple expected[] = {
      {1, 4, 6}, {2, 5, 6},  {1, 7, 8},  {2, 4, 8},  {7, 9, 10}, {3, 6, 10},
      {4, 5, 11}, {8, 9, 11}, {1, 10, 12}, {4, 5, 12}, {3, 6, 13}, {1, 11, 13},
      {1, 3, 5}, {2, 3, 7},  {1, 2, 9},  {9, 12, 13}};
  for (const Triple& t : expected) {
    CAPTURE(t.i); CAPTURE(t.j); CAPTURE(t.k);
    CHECK(zero_lookup.count(t) == 1);
  }

  // consistency with the independent determinant oracle
  const auto c = closed_form(kBase);
  std::size_t oracle_count = 0;
  for (const Triple& t : Triple::all()) {
    const bool oracle_zero = det_sign(c, t).is_zero();
    if (oracle_zero) ++oracle_count;
    CHECK(zero_lookup.count(t) == (oracle_zero ? 1u : 0u));
  }
  CHECK(zeros.size() == oracle_count);

  // the flip at (9,12,13) removes exactly that zero
  const auto plus_zeros = zero_set(reference_chirotopes().plus);
  CHECK(plus_zeros.size() == zeros.size() - 1);
  for (const Triple& t : plus_zeros) CHECK(zero_lookup.count(t) == 1);
}

TEST_CASE("axiom 3 holds for the base chirotope and realized chirotopes") {
  const Chirotope chi = chirotope_of(closed_form(kBase));
  CHECK(axiom3_check(chi).pass());
  CHECK_FALSE(axiom3_has_violation(chi));

  // the flipped variants are oriented matroids too
  CHECK(axiom3_check(reference_chirotopes().minus).pass());
  CHECK(axiom3_check(reference_chirotopes().plus).pass());

  std::mt19937_64 rng(47);
  int tested = 0;
  while (tested < 5) {
    Configuration<Rational> c = random_configuration(rng);
    Chirotope random_chi;
    try {
      random_chi = chirotope_of(c);
    } catch (const identically_zero_error&) {
      continue;
    }
    CHECK(random_chi.not_identically_zero());
    CHECK(axiom3_check(random_chi).pass());
    ++tested;
  }
}

namespace {

// Plain-loop oracle: evaluates the exchange implication literally through
// eval(), premise first, no sign cube, no early exit on the conclusion.
std::vector<std::array<int, 6>> axiom3_naive(const Chirotope& chi) {
  std::vector<std::array<int, 6>> out;
  for (int i1 = 1; i1 <= kPoints; ++i1)
    for (int i2 = 1; i2 <= kPoints; ++i2)
      for (int i3 = 1; i3 <= kPoints; ++i3)
        for (int j1 = 1; j1 <= kPoints; ++j1)
          for (int j2 = 1; j2 <= kPoints; ++j2)
            for (int j3 = 1; j3 <= kPoints; ++j3) {
              const bool premise =
                  (chi.eval(j1, i2, i3) * chi.eval(i1, j2, j3)).to_int() >= 0 &&
                  (chi.eval(j2, i2, i3) * chi.eval(j1, i1, j3)).to_int() >= 0 &&
                  (chi.eval(j3, i2, i3) * chi.eval(j1, j2, i1)).to_int() >= 0;
              if (!premise) continue;
              if ((chi.eval(i1, i2, i3) * chi.eval(j1, j2, j3)).to_int() < 0)
                out.push_back({i1, i2, i3, j1, j2, j3});
            }
  return out;
}

}  // namespace

TEST_CASE("axiom3_check matches the plain-loop oracle") {
  const Chirotope chi = chirotope_of(closed_form(kBase));
  CHECK(axiom3_naive(chi).empty());

  const Chirotope corrupted = flip(chi, Triple(1, 2, 3), Sign::negative());
  const auto oracle = axiom3_naive(corrupted);
  const auto report = axiom3_check(corrupted);
  CHECK_FALSE(oracle.empty());
  CHECK(report.violations == oracle);
}

TEST_CASE("a single-triple corruption is caught by the axiom-3 checker") {
  const Chirotope chi = chirotope_of(closed_form(kBase));
  bool found = false;
  std::array<int, 3> witness{};
  for (const Triple& t : Triple::all()) {
    for (const Sign s : {Sign::negative(), Sign::positive()}) {
      if (chi.value(t) == s) continue;
      if (axiom3_has_violation(flip(chi, t, s))) {
        found = true;
        witness = {t.i, t.j, t.k};
        break;
      }
    }
    if (found) break;
  }
  CAPTURE(witness[0]); CAPTURE(witness[1]); CAPTURE(witness[2]);
  CHECK(found);
}

TEST_CASE("axiom 3 violation list is independent of the thread count") {
  const Chirotope corrupted =
      flip(chirotope_of(closed_form(kBase)), Triple(1, 2, 3), Sign::negative());

  setenv("CHIRO_THREADS", "1", 1);
  const auto single = axiom3_check(corrupted);
  setenv("CHIRO_THREADS", "3", 1);
  const auto multi = axiom3_check(corrupted);
  unsetenv("CHIRO_THREADS");

  CHECK_FALSE(single.pass());
  CHECK(single.violations == multi.violations);
}

TEST_CASE("serialization") {
  const Chirotope chi = reference_chirotopes().zero;

  SUBCASE("csv shape and spot rows") {
    const std::string csv = to_csv(chi);
    CHECK(csv == to_csv(chi));  // byte-stable
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    CHECK(line == "i,j,k,sign");
    std::getline(is, line);
    CHECK(line == "1,2,3,1");
    int rows = 1;
    while (std::getline(is, line)) ++rows;
    CHECK(rows == kTriples);
    CHECK(csv.find("9,12,13,0\n") != std::string::npos);
  }

  SUBCASE("csv golden file") {
    std::ifstream golden(std::string(CHIRO_TEST_DATA_DIR) + "/chi0.csv", std::ios::binary);
    REQUIRE(golden.good());
    std::ostringstream content;
    content << golden.rdbuf();
    CHECK(to_csv(chi) == content.str());
  }

  SUBCASE("json is byte-stable and carries all triples") {
    const std::string js = to_json(chi);
    CHECK(js == to_json(chi));
    CHECK(js.find("\"triples\"") != std::string::npos);
  }
}
