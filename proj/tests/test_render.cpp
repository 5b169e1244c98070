#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <regex>
#include <string>

#include "chiro/chirotope.hpp"
#include "chiro/classification.hpp"
#include "chiro/errors.hpp"
#include "chiro/render.hpp"

using namespace chiro;

namespace {

const ParamPoint kBase{Rational(1, 2), Rational(1, 2), Rational(1, 3)};

int count_occurrences(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + 1))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("fixed-point decimal formatting, round half to even") {
  CHECK(format_decimal(Rational(1, 2), 6) == "0.500000");
  CHECK(format_decimal(Rational(1, 3), 6) == "0.333333");
  CHECK(format_decimal(Rational(2, 3), 6) == "0.666667");
  CHECK(format_decimal(Rational(-7, 4), 6) == "-1.750000");
  CHECK(format_decimal(Rational(5), 6) == "5.000000");
  CHECK(format_decimal(Rational(0), 6) == "0.000000");
  // ties land on the even neighbor
  CHECK(format_decimal(Rational(1, 2000000), 6) == "0.000000");
  CHECK(format_decimal(Rational(3, 2000000), 6) == "0.000002");
  CHECK(format_decimal(Rational(5, 2000000), 6) == "0.000002");
  // negative zero is normalized
  CHECK(format_decimal(Rational(-1, 2000000), 6) == "0.000000");
  CHECK(format_decimal(Rational(-3, 2000000), 6) == "-0.000002");
  CHECK(format_decimal(Rational(7, 2), 0) == "4");
  CHECK(format_decimal(Rational(5, 2), 0) == "2");
}

TEST_CASE("base configuration renders 10 finite points and 3 infinity markers") {
  const std::string svg = render_svg(closed_form(kBase));
  CHECK(count_occurrences(svg, "<circle class=\"pt\"") == 10);
  CHECK(count_occurrences(svg, "<g class=\"inf\"") == 3);
  CHECK(svg.find("data-label=\"9\"") != std::string::npos);
}

TEST_CASE("rendering is byte-identical across runs") {
  const auto c = closed_form(kBase);
  CHECK(render_svg(c) == render_svg(c));

  const ParamPoint minus_point{Rational(1, 4), Rational(3, 4), Rational(1, 8)};
  REQUIRE(classify(minus_point) == Label::minus);
  const auto m = closed_form(minus_point);
  CHECK(render_svg(m) == render_svg(m));
  CHECK(count_occurrences(render_svg(m), "<circle class=\"pt\"") == 10);
}

TEST_CASE("every line corresponds to a zero triple and vice versa") {
  const auto c = closed_form(kBase);
  const RenderOptions options;
  const std::string svg = render_svg(c, options);

  const auto points = affine_image(c);
  int expected_lines = 0;
  for (const Triple& t : zero_set(chirotope_of(c))) {
    int finite_in_viewport = 0;
    int finite = 0;
    for (int label : {t.i, t.j, t.k}) {
      const AffinePoint& p = points[static_cast<std::size_t>(label - 1)];
      if (p.at_infinity) continue;
      ++finite;
      if (p.x >= options.x_min && p.x <= options.x_max && p.y >= options.y_min &&
          p.y <= options.y_max)
        ++finite_in_viewport;
    }
    if (finite >= 2) ++expected_lines;
    // the invariant: >= 2 finite in-viewport points guarantee a drawn line
    if (finite_in_viewport >= 2) {
      std::string key = "data-triple=\"" + std::to_string(t.i) + "," + std::to_string(t.j) +
                        "," + std::to_string(t.k) + "\"";
      CHECK(svg.find(key) != std::string::npos);
    }
  }
  CHECK(count_occurrences(svg, "<line class=\"zt\"") == expected_lines);
}

TEST_CASE("svg point coordinates match the affine image to 6 decimals") {
  const auto c = closed_form(kBase);
  const RenderOptions o;
  const std::string svg = render_svg(c, o);
  const auto points = affine_image(c);

  const std::regex circle_re(
      "<circle class=\"pt\" data-label=\"([0-9]+)\" cx=\"([-0-9.]+)\" cy=\"([-0-9.]+)\"");
  const double sx = o.width / 1.75, sy = o.height / 1.75;  // world span is 7/4
  int matched = 0;
  for (std::sregex_iterator it(svg.begin(), svg.end(), circle_re), end; it != end; ++it) {
    const int label = std::stoi((*it)[1]);
    const double cx = std::stod((*it)[2]);
    const double cy = std::stod((*it)[3]);
    const AffinePoint& p = points[static_cast<std::size_t>(label - 1)];
    REQUIRE_FALSE(p.at_infinity);
    const double world_x = -0.25 + cx / sx;
    const double world_y = 1.5 - cy / sy;
    const double px = std::stod(format_decimal(p.x, 6));
    const double py = std::stod(format_decimal(p.y, 6));
    CHECK(world_x == doctest::Approx(px).epsilon(1e-6));
    CHECK(world_y == doctest::Approx(py).epsilon(1e-6));
    ++matched;
  }
  CHECK(matched == 10);
}

TEST_CASE("render options") {
  const auto c = closed_form(kBase);

  SUBCASE("lines and labels can be disabled") {
    RenderOptions o;
    o.draw_lines = false;
    o.label_points = false;
    const std::string svg = render_svg(c, o);
    CHECK(count_occurrences(svg, "<line class=\"zt\"") == 0);
    CHECK(svg.find("<g class=\"labels\"") == std::string::npos);
  }

  SUBCASE("infinity markers can be omitted") {
    RenderOptions o;
    o.infinity_style = InfinityStyle::omit;
    CHECK(count_occurrences(render_svg(c, o), "<g class=\"inf\"") == 0);
  }

  SUBCASE("degenerate viewport is rejected") {
    RenderOptions o;
    o.x_min = Rational(2);
    o.x_max = Rational(1);
    CHECK_THROWS_AS(render_svg(c, o), empty_viewport_error);
  }

  SUBCASE("viewport without finite points is rejected") {
    RenderOptions o;
    o.x_min = Rational(100);
    o.x_max = Rational(101);
    CHECK_THROWS_AS(render_svg(c, o), empty_viewport_error);
  }
}
