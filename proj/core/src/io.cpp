#include "chiro/io.hpp"

#include <sstream>

#include "json.hpp"

namespace chiro {

using nlohmann::json;

std::string to_json(const Configuration<Rational>& c) {
  json cols = json::array();
  for (int l = 1; l <= kPoints; ++l) {
    const auto& v = c.col(l);
    cols.push_back({{"label", l}, {"column", {v.x.str(), v.y.str(), v.z.str()}}});
  }
  return json{{"columns", cols}}.dump(2);
}

std::string to_json(const std::vector<AffinePoint>& points) {
  json arr = json::array();
  for (const AffinePoint& p : points) {
    if (p.at_infinity) {
      arr.push_back({{"label", p.label},
                     {"at_infinity", true},
                     {"direction", {p.x.str(), p.y.str()}}});
    } else {
      arr.push_back(
          {{"label", p.label}, {"at_infinity", false}, {"x", p.x.str()}, {"y", p.y.str()}});
    }
  }
  return json{{"points", arr}}.dump(2);
}

std::string to_json(const Chirotope& chi) {
  json triples = json::array();
  for (const Triple& t : Triple::all())
    triples.push_back({t.i, t.j, t.k, chi.value(t).to_int()});
  return json{{"points", kPoints}, {"rank", 3}, {"triples", triples}}.dump(2);
}

std::string to_json(const InequalityProfile& f) {
  return json{{"s", f.s.str()},
              {"1-s", f.one_minus_s.str()},
              {"t", f.t.str()},
              {"1-t", f.one_minus_t.str()},
              {"u", f.u.str()},
              {"1-t-u", f.one_minus_t_minus_u.str()},
              {"t-u", f.t_minus_u.str()},
              {"t^2-(1-s)u", f.t_quad.str()},
              {"(1-t)^2-su", f.one_minus_t_quad.str()},
              {"D", f.d.str()}}
      .dump(2);
}

std::string to_csv(const Chirotope& chi) {
  std::ostringstream os;
  os << "i,j,k,sign\n";
  for (const Triple& t : Triple::all())
    os << t.i << ',' << t.j << ',' << t.k << ',' << chi.value(t).to_int() << '\n';
  return os.str();
}

}  // namespace chiro
