#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chiro/classification.hpp"
#include "chiro/configuration.hpp"

namespace chiro {

// Lattice over the open cube: points (a/N, b/N, c/N) with 1 <= a,b,c <= N-1.
struct GridSpec {
  int resolution;  // N >= 2
};

struct LatticePoint {
  int a = 0;
  int b = 0;
  int c = 0;

  ParamPoint param(int resolution) const {
    return {Rational(a, resolution), Rational(b, resolution), Rational(c, resolution)};
  }

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Labels for the full lattice in lexicographic (a, b, c) order.
std::vector<Label> classify_lattice(const GridSpec& spec,
                                    ClassifyMode mode = ClassifyMode::checked);

// Nodes are exactly the lattice points with classify(p) == target; edges join
// nodes at Chebyshev distance 1 (king moves: each coordinate changes by at
// most 1/N, and at least one does). Axis-only adjacency fragments the thin
// cusps of the plus region into spurious islands; king adjacency heals those
// while still being unable to cross a lattice hyperplane such as s = 1/2
// without landing on it. Both lists are sorted.
struct SampleGraph {
  int resolution = 0;
  Label target = Label::other;
  std::vector<LatticePoint> nodes;
  std::vector<std::pair<int, int>> edges;  // node index pairs, first < second

  std::optional<int> index_of(const LatticePoint& p) const;
};

SampleGraph sample_grid(const GridSpec& spec, Label target,
                        ClassifyMode mode = ClassifyMode::checked);
SampleGraph sample_grid_from_labels(const GridSpec& spec, Label target,
                                    const std::vector<Label>& labels);

// Connected components; representatives are the lexicographically smallest
// node of each component, listed in that order.
struct ComponentSummary {
  int count = 0;
  std::vector<LatticePoint> representatives;
  std::vector<int> sizes;
};

ComponentSummary connected_components(const SampleGraph& g);

bool path_exists(const SampleGraph& g, const LatticePoint& a, const LatticePoint& b);

// Two-part disconnection certificate for the minus/plus regions:
// (a) symbolic — substituting s = 1/2 into det(x9,x12,x13) yields the zero
//     polynomial, so no point of the slice carries sign -1 or +1 there;
// (b) sampled — the full lattice slice s = 1/2 contains no minus/plus point,
//     while one target-labeled witness sits on each side of the slice.
// Any continuous path between the witnesses would have to cross s = 1/2.
struct SeparationCertificate {
  Label target = Label::other;
  std::string restricted_determinant;  // det(x9,x12,x13) at s = 1/2, as text
  bool symbolic_zero = false;
  int slice_resolution = 0;
  int slice_points = 0;
  int slice_hits = 0;  // slice points labeled minus or plus (must be 0)
  ParamPoint low_side;
  ParamPoint high_side;
  Label low_side_label = Label::other;
  Label high_side_label = Label::other;

  bool pass() const {
    return symbolic_zero && slice_hits == 0 && low_side_label == target &&
           high_side_label == target;
  }
};

// Requires an even slice resolution so s = 1/2 is on the lattice.
SeparationCertificate separation_witness(Label target, int slice_resolution = 16,
                                         ClassifyMode mode = ClassifyMode::checked);

// Samples of the two zero-region sheets plus an explicit polyline between the
// sheets through the intersection segment s = t = 1/2. Path legs stay inside
// one sheet each; between consecutive vertices the sheet's chart midpoint is
// classified as a heuristic segment witness (the sheets are curved, so this
// samples the surface arc, not the chord).
struct PathVertex {
  ParamPoint p;
  bool on_sheet_s = false;
  bool on_sheet_t = false;
  Label label = Label::other;
};

struct ZeroSheetReport {
  int m = 0;
  std::vector<ParamPoint> sheet_s_samples;  // (1/2, b/M, c/M) meeting the sheet constraints
  std::vector<ParamPoint> sheet_t_samples;  // (a/M, (1-ac/M^2)/(2-c/M), c/M) likewise
  bool samples_all_zero = false;
  std::vector<PathVertex> path;        // (1/2,3/8,1/4) -> (1/2,1/2,1/4) -> (3/4,11/24,2/7)
  std::vector<PathVertex> midpoints;   // chart midpoints of consecutive path vertices
  bool path_all_zero = false;
  bool midpoints_all_zero = false;

  bool pass() const { return samples_all_zero && path_all_zero && midpoints_all_zero; }
};

ZeroSheetReport zero_sheet_samples(int m, ClassifyMode mode = ClassifyMode::checked);

}  // namespace chiro
