#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "knotforge/torus_curve.hpp"

namespace knotforge::graphs {

// A fat vertex of one of the two intersection graphs: the boundary component
// it caps off lies on torus `torus` with orientation `sign` (+1/-1) relative
// to the other components there. torus < 0 means no orientation class (for
// instance a component on the outer boundary).
struct LabeledVertex {
  int torus = -1;
  int sign = 0;
};

struct LabeledGraph {
  std::vector<LabeledVertex> vertices;
  std::vector<std::array<int, 2>> edges;
};

// Edge e of `q` is the same arc as edge correspondence[e] of `f`, endpoints
// in the same order.
struct LabeledPairSample {
  LabeledGraph q;
  LabeledGraph f;
  std::vector<int> correspondence;
};

enum class VertexRelation { Parallel, AntiParallel, Unrelated };

VertexRelation relation(const LabeledVertex& a, const LabeledVertex& b);

// Throws Errc::MalformedSample: edge sets not in bijection, indices out of
// range, signs not +-1, or the two ends of an arc on different tori in the
// two graphs.
void check_well_formed(const LabeledPairSample& sample);

// Edges of `q` whose ends are related (same torus) but which join parallel
// vertices in both graphs or in neither.
std::vector<int> parity_violations(const LabeledPairSample& sample);

// True iff every related arc joins parallel vertices in exactly one graph.
bool validate_parity(const LabeledPairSample& sample);

// One torus of the synthetic model: boundary slopes of the two surfaces and
// the orientation sign of each boundary component.
struct TorusPattern {
  TorusCurve slope_f = curves::mu;
  TorusCurve slope_q = curves::lambda;
  std::vector<int> f_signs;
  std::vector<int> q_signs;
};

// Random arcs between intersection points of the boundary curves. A point of
// F_i and Q_j on a torus has local sign s_F(i) s_Q(j) e, with e the sign of
// det(slope_f, slope_q), and the two ends of an arc on the same torus carry
// opposite signs (both surfaces orientable). `cross_torus_share` of the arcs
// (in percent) join different tori. Deterministic in `seed`.
LabeledPairSample synthetic_parity_sample(const std::vector<TorusPattern>& tori, int arcs, std::uint64_t seed,
                                          int cross_torus_share = 20);

}  // namespace knotforge::graphs
