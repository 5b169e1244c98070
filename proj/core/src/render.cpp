#include "chiro/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "chiro/chirotope.hpp"
#include "chiro/errors.hpp"
#include "chiro/vec3.hpp"

namespace chiro {

std::string format_decimal(const Rational& q, int places) {
  mpz_class scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;

  const mpz_class n = q.num() * scale;
  const mpz_class d = q.den();  // > 0
  mpz_class mag = abs(n), quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), mag.get_mpz_t(), d.get_mpz_t());
  const mpz_class twice = 2 * rem;
  if (twice > d || (twice == d && mpz_odd_p(quot.get_mpz_t())))
    quot += 1;

  std::string digits = quot.get_str();
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, static_cast<std::size_t>(places + 1) - digits.size(), '0');

  std::string out;
  if (sgn(n) < 0 && quot != 0) out += '-';
  if (places == 0) return out + digits;
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  out += '.';
  out += digits.substr(digits.size() - static_cast<std::size_t>(places));
  return out;
}

namespace {

struct Screen {
  Rational x;
  Rational y;
};

struct Mapper {
  Rational x_min, y_max;
  Rational sx, sy;  // pixels per world unit

  Screen to_screen(const Rational& wx, const Rational& wy) const {
    return {(wx - x_min) * sx, (y_max - wy) * sy};
  }
};

std::string fmt(const Rational& q) { return format_decimal(q, 6); }

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

// All intersections of the line through two finite world points with the
// viewport rectangle, exact; returns the chord endpoints or nothing.
std::vector<Screen> clip_line(const RenderOptions& o, const Mapper& map, const Rational& px,
                              const Rational& py, const Rational& qx, const Rational& qy) {
  // Homogeneous line through (px,py,1) and (qx,qy,1).
  const Vec3<Rational> line = cross<Rational>({px, py, Rational(1)}, {qx, qy, Rational(1)});
  const Rational &a = line.x, &b = line.y, &c = line.z;

  std::vector<std::pair<Rational, Rational>> hits;
  auto push_unique = [&hits](const Rational& x, const Rational& y) {
    for (const auto& h : hits)
      if (h.first == x && h.second == y) return;
    hits.emplace_back(x, y);
  };

  if (!b.is_zero()) {
    for (const Rational& x : {o.x_min, o.x_max}) {
      const Rational y = -(a * x + c) / b;
      if (y >= o.y_min && y <= o.y_max) push_unique(x, y);
    }
  }
  if (!a.is_zero()) {
    for (const Rational& y : {o.y_min, o.y_max}) {
      const Rational x = -(b * y + c) / a;
      if (x >= o.x_min && x <= o.x_max) push_unique(x, y);
    }
  }
  if (hits.size() < 2) return {};

  std::sort(hits.begin(), hits.end(), [](const auto& l, const auto& r) {
    if (l.first != r.first) return l.first < r.first;
    return l.second < r.second;
  });
  return {map.to_screen(hits.front().first, hits.front().second),
          map.to_screen(hits.back().first, hits.back().second)};
}

}  // namespace

std::string render_svg(const Configuration<Rational>& c, const RenderOptions& o) {
  if (!(o.x_min < o.x_max) || !(o.y_min < o.y_max))
    throw empty_viewport_error("degenerate viewport");

  const std::vector<AffinePoint> points = affine_image(c);
  const Mapper map{o.x_min, o.y_max, Rational(o.width) / (o.x_max - o.x_min),
                   Rational(o.height) / (o.y_max - o.y_min)};

  auto in_viewport = [&o](const AffinePoint& p) {
    return !p.at_infinity && p.x >= o.x_min && p.x <= o.x_max && p.y >= o.y_min && p.y <= o.y_max;
  };
  if (std::none_of(points.begin(), points.end(), in_viewport))
    throw empty_viewport_error("no finite point of the configuration is inside the viewport");

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << o.width << "\" height=\""
      << o.height << "\" viewBox=\"0 0 " << o.width << " " << o.height << "\">\n";
  svg << "  <rect width=\"" << o.width << "\" height=\"" << o.height << "\" fill=\"white\"/>\n";

  if (o.draw_lines) {
    svg << "  <g class=\"lines\" stroke=\"#888888\" stroke-width=\"1\">\n";
    for (const Triple& t : zero_set(chirotope_of(c))) {
      std::vector<const AffinePoint*> finite;
      for (int label : {t.i, t.j, t.k}) {
        const AffinePoint& p = points[static_cast<std::size_t>(label - 1)];
        if (!p.at_infinity) finite.push_back(&p);
      }
      if (finite.size() < 2) continue;
      const auto chord =
          clip_line(o, map, finite[0]->x, finite[0]->y, finite[1]->x, finite[1]->y);
      if (chord.empty()) continue;
      svg << "    <line class=\"zt\" data-triple=\"" << t.i << "," << t.j << "," << t.k
          << "\" x1=\"" << fmt(chord[0].x) << "\" y1=\"" << fmt(chord[0].y) << "\" x2=\""
          << fmt(chord[1].x) << "\" y2=\"" << fmt(chord[1].y) << "\"/>\n";
    }
    svg << "  </g>\n";
  }

  svg << "  <g class=\"points\" fill=\"black\">\n";
  for (const AffinePoint& p : points) {
    if (p.at_infinity) continue;
    const Screen s = map.to_screen(p.x, p.y);
    svg << "    <circle class=\"pt\" data-label=\"" << p.label << "\" cx=\"" << fmt(s.x)
        << "\" cy=\"" << fmt(s.y) << "\" r=\"4\"/>\n";
  }
  svg << "  </g>\n";

  if (o.label_points) {
    svg << "  <g class=\"labels\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#222222\">\n";
    for (const AffinePoint& p : points) {
      if (p.at_infinity) continue;
      const Screen s = map.to_screen(p.x, p.y);
      svg << "    <text x=\"" << fmt(s.x + Rational(6)) << "\" y=\"" << fmt(s.y - Rational(6))
          << "\">" << p.label << "</text>\n";
    }
    svg << "  </g>\n";
  }

  if (o.infinity_style == InfinityStyle::arrow_at_margin) {
    svg << "  <g class=\"infinity\" stroke=\"#444444\" stroke-width=\"1.5\" fill=\"#444444\""
        << " font-family=\"sans-serif\" font-size=\"13\">\n";
    const Rational cx = (o.x_min + o.x_max) / Rational(2);
    const Rational cy = (o.y_min + o.y_max) / Rational(2);
    for (const AffinePoint& p : points) {
      if (!p.at_infinity) continue;
      if (p.x.is_zero() && p.y.is_zero()) continue;  // zero column, no direction

      // Exit point of the ray from the viewport center along (x, y), exact.
      Rational best;
      bool have = false;
      auto consider = [&](const Rational& lambda) {
        if (lambda > Rational(0) && (!have || lambda < best)) {
          best = lambda;
          have = true;
        }
      };
      if (!p.x.is_zero()) {
        consider((o.x_max - cx) / p.x);
        consider((o.x_min - cx) / p.x);
      }
      if (!p.y.is_zero()) {
        consider((o.y_max - cy) / p.y);
        consider((o.y_min - cy) / p.y);
      }
      if (!have) continue;
      const Screen tip = map.to_screen(cx + best * p.x, cy + best * p.y);

      // Arrow geometry in screen space; this is the float boundary.
      const double tx = std::stod(fmt(tip.x)), ty = std::stod(fmt(tip.y));
      double dx = std::stod(fmt(p.x * map.sx));
      double dy = -std::stod(fmt(p.y * map.sy));
      const double len = std::sqrt(dx * dx + dy * dy);
      dx /= len;
      dy /= len;
      const double bx = tx - 18.0 * dx, by = ty - 18.0 * dy;
      const double hx = tx - 7.0 * dx, hy = ty - 7.0 * dy;
      const double nx = -dy, ny = dx;
      svg << "    <g class=\"inf\" data-label=\"" << p.label << "\">\n";
      svg << "      <line x1=\"" << fmt(bx) << "\" y1=\"" << fmt(by) << "\" x2=\"" << fmt(tx)
          << "\" y2=\"" << fmt(ty) << "\"/>\n";
      svg << "      <polygon points=\"" << fmt(tx) << "," << fmt(ty) << " "
          << fmt(hx + 3.5 * nx) << "," << fmt(hy + 3.5 * ny) << " " << fmt(hx - 3.5 * nx) << ","
          << fmt(hy - 3.5 * ny) << "\"/>\n";
      svg << "      <text stroke=\"none\" x=\"" << fmt(bx - 14.0 * dx + 4.0) << "\" y=\""
          << fmt(by - 14.0 * dy) << "\">" << p.label << "</text>\n";
      svg << "    </g>\n";
    }
    svg << "  </g>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace chiro
