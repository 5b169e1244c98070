#pragma once

#include <string>

#include "chiro/configuration.hpp"
#include "chiro/rational.hpp"

namespace chiro {

enum class InfinityStyle { arrow_at_margin, omit };

struct RenderOptions {
  // World-coordinate viewport; the default contains every finite point of
  // the base configuration and of typical realizations nearby.
  Rational x_min = Rational(-1, 4);
  Rational x_max = Rational(3, 2);
  Rational y_min = Rational(-1, 4);
  Rational y_max = Rational(3, 2);
  int width = 600;
  int height = 600;
  bool draw_lines = true;    // one line per zero triple with >= 2 finite points
  bool label_points = true;
  InfinityStyle infinity_style = InfinityStyle::arrow_at_margin;
};

// Fixed-point decimal expansion of q with round-half-even at `places`
// digits; trailing zeros kept, "-0" normalized to "0". This is the only
// place exact values are flattened for output.
std::string format_decimal(const Rational& q, int places);

// Deterministic SVG 1.1 document: byte-identical for identical inputs.
// Throws empty_viewport_error for a degenerate viewport or when no finite
// point of the configuration lies inside it.
std::string render_svg(const Configuration<Rational>& c, const RenderOptions& o = {});

}  // namespace chiro
