#include "chiro/topology.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "chiro/errors.hpp"
#include "chiro/parallel.hpp"

namespace chiro {

namespace {

void require_resolution(const GridSpec& spec) {
  if (spec.resolution < 2) throw std::invalid_argument("grid resolution must be >= 2");
}

int pack(const LatticePoint& p) { return (p.a << 20) | (p.b << 10) | p.c; }

}  // namespace

std::vector<Label> classify_lattice(const GridSpec& spec, ClassifyMode mode) {
  require_resolution(spec);
  const int n = spec.resolution;
  const std::int64_t side = n - 1;
  const std::int64_t total = side * side * side;

  std::vector<Label> labels(static_cast<std::size_t>(total));
  const int chunks = plan_chunks(total);
  run_chunks(total, chunks, [&](std::int64_t begin, std::int64_t end, int) {
    for (std::int64_t idx = begin; idx < end; ++idx) {
      const int a = static_cast<int>(idx / (side * side)) + 1;
      const int b = static_cast<int>(idx / side % side) + 1;
      const int c = static_cast<int>(idx % side) + 1;
      labels[static_cast<std::size_t>(idx)] = classify(LatticePoint{a, b, c}.param(n), mode);
    }
  });
  return labels;
}

SampleGraph sample_grid_from_labels(const GridSpec& spec, Label target,
                                    const std::vector<Label>& labels) {
  require_resolution(spec);
  const int n = spec.resolution;
  const std::int64_t side = n - 1;
  if (labels.size() != static_cast<std::size_t>(side * side * side))
    throw std::invalid_argument("label field size does not match the grid resolution");

  SampleGraph g;
  g.resolution = n;
  g.target = target;
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(labels.size()); ++idx) {
    if (labels[static_cast<std::size_t>(idx)] != target) continue;
    const int a = static_cast<int>(idx / (side * side)) + 1;
    const int b = static_cast<int>(idx / side % side) + 1;
    const int c = static_cast<int>(idx % side) + 1;
    g.nodes.push_back({a, b, c});
  }

  std::unordered_map<int, int> index;
  index.reserve(g.nodes.size() * 2);
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    index.emplace(pack(g.nodes[i]), static_cast<int>(i));

  // The 13 king-move offsets that point to a lexicographically larger node,
  // so every edge is discovered exactly once with first index < second.
  std::vector<LatticePoint> forward;
  for (int da = -1; da <= 1; ++da)
    for (int db = -1; db <= 1; ++db)
      for (int dc = -1; dc <= 1; ++dc)
        if (LatticePoint{da, db, dc} > LatticePoint{0, 0, 0}) forward.push_back({da, db, dc});

  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const LatticePoint& p = g.nodes[i];
    std::vector<int> neighbors;
    for (const LatticePoint& d : forward) {
      const LatticePoint q{p.a + d.a, p.b + d.b, p.c + d.c};
      if (q.a < 1 || q.a > n - 1 || q.b < 1 || q.b > n - 1 || q.c < 1 || q.c > n - 1) continue;
      const auto it = index.find(pack(q));
      if (it != index.end()) neighbors.push_back(it->second);
    }
    std::sort(neighbors.begin(), neighbors.end());
    for (int j : neighbors) g.edges.emplace_back(static_cast<int>(i), j);
  }
  return g;
}

SampleGraph sample_grid(const GridSpec& spec, Label target, ClassifyMode mode) {
  return sample_grid_from_labels(spec, target, classify_lattice(spec, mode));
}

std::optional<int> SampleGraph::index_of(const LatticePoint& p) const {
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), p);
  if (it == nodes.end() || *it != p) return std::nullopt;
  return static_cast<int>(it - nodes.begin());
}

namespace {

std::vector<std::vector<int>> adjacency(const SampleGraph& g) {
  std::vector<std::vector<int>> adj(g.nodes.size());
  for (const auto& [i, j] : g.edges) {
    adj[static_cast<std::size_t>(i)].push_back(j);
    adj[static_cast<std::size_t>(j)].push_back(i);
  }
  return adj;
}

}  // namespace

ComponentSummary connected_components(const SampleGraph& g) {
  const auto adj = adjacency(g);
  std::vector<int> component(g.nodes.size(), -1);

  ComponentSummary summary;
  for (std::size_t root = 0; root < g.nodes.size(); ++root) {
    if (component[root] != -1) continue;
    const int id = summary.count++;
    int size = 0;
    std::deque<int> queue{static_cast<int>(root)};
    component[root] = id;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      ++size;
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (component[static_cast<std::size_t>(w)] != -1) continue;
        component[static_cast<std::size_t>(w)] = id;
        queue.push_back(w);
      }
    }
    // Nodes are sorted, so the scan root is its component's lex minimum.
    summary.representatives.push_back(g.nodes[root]);
    summary.sizes.push_back(size);
  }
  return summary;
}

bool path_exists(const SampleGraph& g, const LatticePoint& a, const LatticePoint& b) {
  const auto ia = g.index_of(a), ib = g.index_of(b);
  if (!ia || !ib) throw node_absent_error("path endpoint is not a node of the sample graph");
  if (*ia == *ib) return true;

  const auto adj = adjacency(g);
  std::vector<bool> seen(g.nodes.size(), false);
  std::deque<int> queue{*ia};
  seen[static_cast<std::size_t>(*ia)] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      if (w == *ib) return true;
      seen[static_cast<std::size_t>(w)] = true;
      queue.push_back(w);
    }
  }
  return false;
}

SeparationCertificate separation_witness(Label target, int slice_resolution, ClassifyMode mode) {
  if (target != Label::minus && target != Label::plus)
    throw std::invalid_argument("separation witness targets minus or plus");
  if (slice_resolution < 2 || slice_resolution % 2 != 0)
    throw std::invalid_argument("slice resolution must be even and >= 2 so s = 1/2 is on it");

  SeparationCertificate cert;
  cert.target = target;

  const Configuration<Poly3>& x = closed_form_symbolic();
  const Poly3 d = det3(x.col(9), x.col(12), x.col(13));
  const Poly3 restricted = d.substitute(Poly3::Var::s, Rational(1, 2));
  cert.symbolic_zero = restricted.is_zero();
  cert.restricted_determinant = restricted.str();

  const int n = slice_resolution;
  cert.slice_resolution = n;
  cert.slice_points = (n - 1) * (n - 1);
  const Rational half(1, 2);
  for (int b = 1; b < n; ++b) {
    for (int c = 1; c < n; ++c) {
      const Label label = classify({half, Rational(b, n), Rational(c, n)}, mode);
      if (label == Label::minus || label == Label::plus) ++cert.slice_hits;
    }
  }

  if (target == Label::minus) {
    cert.low_side = {Rational(1, 4), Rational(3, 4), Rational(1, 8)};
    cert.high_side = {Rational(3, 4), Rational(1, 4), Rational(1, 8)};
  } else {
    cert.low_side = {Rational(1, 4), Rational(1, 2), Rational(1, 4)};
    cert.high_side = {Rational(3, 4), Rational(1, 2), Rational(1, 4)};
  }
  cert.low_side_label = classify(cert.low_side, mode);
  cert.high_side_label = classify(cert.high_side, mode);
  return cert;
}

namespace {

// Lift of the sheet_t chart: t = (1-su)/(2-u), exact for rational (s, u).
Rational sheet_t_height(const Rational& s, const Rational& u) {
  const Rational one(1), two(2);
  return (one - s * u) / (two - u);
}

PathVertex make_vertex(const ParamPoint& p, ClassifyMode mode) {
  const SheetMembership m = region_zero(p);
  return {p, m.sheet_s, m.sheet_t, classify(p, mode)};
}

}  // namespace

ZeroSheetReport zero_sheet_samples(int m, ClassifyMode mode) {
  if (m < 2) throw std::invalid_argument("sheet sample resolution must be >= 2");

  ZeroSheetReport report;
  report.m = m;
  const Rational half(1, 2);

  report.samples_all_zero = true;
  for (int b = 1; b < m; ++b) {
    for (int c = 1; c < m; ++c) {
      const ParamPoint p{half, Rational(b, m), Rational(c, m)};
      if (!region_zero(p).sheet_s) continue;
      report.sheet_s_samples.push_back(p);
      if (classify(p, mode) != Label::zero) report.samples_all_zero = false;
    }
  }
  for (int a = 1; a < m; ++a) {
    for (int c = 1; c < m; ++c) {
      const Rational s(a, m), u(c, m);
      const ParamPoint p{s, sheet_t_height(s, u), u};
      if (!region_zero(p).sheet_t) continue;
      report.sheet_t_samples.push_back(p);
      if (classify(p, mode) != Label::zero) report.samples_all_zero = false;
    }
  }

  // Leg 1 moves inside sheet_s from (1/2, 3/8, 1/4) to the intersection point
  // (1/2, 1/2, 1/4); leg 2 moves inside sheet_t, in its (s, u) chart, from
  // there to (3/4, 11/24, 2/7).
  const int steps = std::max(1, m / 2);
  const ParamPoint start{half, Rational(3, 8), Rational(1, 4)};
  const ParamPoint middle{half, half, Rational(1, 4)};
  const ParamPoint finish{Rational(3, 4), Rational(11, 24), Rational(2, 7)};

  std::vector<ParamPoint> vertices;
  for (int i = 0; i <= steps; ++i) {
    const Rational w(i, steps);
    vertices.push_back({half, start.t + w * (middle.t - start.t), start.u});
  }
  for (int i = 1; i <= steps; ++i) {
    const Rational w(i, steps);
    const Rational s = middle.s + w * (finish.s - middle.s);
    const Rational u = middle.u + w * (finish.u - middle.u);
    vertices.push_back({s, sheet_t_height(s, u), u});
  }

  report.path_all_zero = true;
  for (const ParamPoint& p : vertices) {
    const PathVertex v = make_vertex(p, mode);
    if (v.label != Label::zero) report.path_all_zero = false;
    report.path.push_back(v);
  }

  report.midpoints_all_zero = true;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    const ParamPoint &p = vertices[i], &q = vertices[i + 1];
    ParamPoint mid;
    if (p.s == half && q.s == half) {
      mid = {half, (p.t + q.t) / Rational(2), (p.u + q.u) / Rational(2)};
    } else {
      const Rational s = (p.s + q.s) / Rational(2);
      const Rational u = (p.u + q.u) / Rational(2);
      mid = {s, sheet_t_height(s, u), u};
    }
    const PathVertex v = make_vertex(mid, mode);
    if (v.label != Label::zero) report.midpoints_all_zero = false;
    report.midpoints.push_back(v);
  }
  return report;
}

}  // namespace chiro
