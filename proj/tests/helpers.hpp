#pragma once

#include <random>

#include "chiro/configuration.hpp"
#include "chiro/poly3.hpp"
#include "chiro/rational.hpp"
#include "chiro/vec3.hpp"

namespace chiro::testing {

inline Rational random_rational(std::mt19937_64& rng, long num_bound = 9, long den_bound = 9) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  return Rational(num(rng), den(rng));
}

// Uniform a/b in the open interval (0, 1).
inline Rational random_unit_rational(std::mt19937_64& rng, long den_bound = 64) {
  std::uniform_int_distribution<long> den(2, den_bound);
  const long b = den(rng);
  std::uniform_int_distribution<long> num(1, b - 1);
  return Rational(num(rng), b);
}

inline Vec3<Rational> random_vec(std::mt19937_64& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng)};
}

inline ParamPoint random_param(std::mt19937_64& rng, long den_bound = 64) {
  return {random_unit_rational(rng, den_bound), random_unit_rational(rng, den_bound),
          random_unit_rational(rng, den_bound)};
}

inline Poly3 random_poly(std::mt19937_64& rng, int terms = 4, unsigned max_exp = 3) {
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  Poly3 p;
  for (int i = 0; i < terms; ++i) {
    p += Poly3::monomial({exp(rng), exp(rng), exp(rng)}, random_rational(rng));
  }
  return p;
}

}  // namespace chiro::testing
