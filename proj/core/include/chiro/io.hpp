#pragma once

#include <string>
#include <vector>

#include "chiro/chirotope.hpp"
#include "chiro/classification.hpp"
#include "chiro/configuration.hpp"

namespace chiro {

// Stable machine-readable formats. JSON objects are key-sorted; CSV rows are
// emitted in lexicographic triple order. Both are byte-stable across runs.

std::string to_json(const Configuration<Rational>& c);
std::string to_json(const std::vector<AffinePoint>& points);
std::string to_json(const Chirotope& chi);
std::string to_json(const InequalityProfile& profile);

// Header "i,j,k,sign" followed by the 286 sorted triples.
std::string to_csv(const Chirotope& chi);

}  // namespace chiro
