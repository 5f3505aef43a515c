#pragma once

#include <optional>
#include <vector>

#include "rauzy/matrix.hpp"
#include "rauzy/perm.hpp"
#include "rauzy/stratum.hpp"

namespace rauzy {

// Exact suspension data for a permutation: widths x > 0 obeying the width
// equality, heights y obeying the zipper inequalities and height equality.
struct SuspensionPoint {
  QVec x, y;  // indexed by letter id
};

// Piecewise-linear polygon complex presenting a half-translation surface.
// Each face is a simple polygon traversed counterclockwise; entries record
// which arc each boundary side is glued to, the side's traversal direction
// relative to the arc's own orientation, and the traversal vector.
struct FlatComplex {
  struct Entry {
    int arc;
    int orient;  // +1 if traversal agrees with the arc orientation
    Rat vx, vy;  // traversal vector
  };
  int num_arcs = 0;
  std::vector<std::vector<Entry>> faces;
};

// Corner-traced surface data: singular vertices, cone angles, vertex links.
struct TracedSurface {
  int num_vertices = 0;
  std::vector<int> arc_tail, arc_head;  // vertex id per arc
  std::vector<long> angle_half_turns;   // cone angle in units of pi, per vertex
  // Cyclic prong lists: per vertex, the arc-ends in rotational order.
  // A prong (a, 0) is the tail end of arc a, (a, 1) its head end.
  std::vector<std::vector<std::pair<int, int>>> links;
  long euler_characteristic = 0;
  bool connected = false;
};

TracedSurface trace_surface(const FlatComplex& fc);

// Algebraic intersection number of two cycles of arcs (entries indexed by
// arc id; both must have zero boundary). Computed by resolving the cycles
// into strands near each vertex and counting signed chord crossings in the
// vertex links.
Int cycle_intersection(const FlatComplex& fc, const TracedSurface& ts, const IVec& z1,
                       const IVec& z2);

// Boundary relation of each face as a chain of arcs.
IMat face_relations(const FlatComplex& fc);

// One-polygon suspension complex of an irreducible permutation over a
// suspension point; arc ids are letter ids.
FlatComplex suspension_complex(const GP& pi, const SuspensionPoint& sp);

// -- feasibility ----------------------------------------------------------

// Strict feasibility of the suspension system {x > 0, width equality,
// zipper inequalities, height equality}, decided by exact slack
// maximization. This is the irreducibility contract of this library.
bool is_irreducible(const GP& pi);

// Independent oracle: decides the same strict-feasibility question by
// exhaustive rational vertex enumeration of the slack polytope. Small
// alphabets only.
bool is_irreducible_vertex_oracle(const GP& pi);

// A suspension point with all zipper slacks strictly positive; nullopt when
// the system is infeasible.
std::optional<SuspensionPoint> suspension_point(const GP& pi);

// Cone-angle data of the suspension surface. Requires pi irreducible
// (domain_error otherwise). Abelian permutations report half-orders.
SingularityData singularity_data(const GP& pi);

}  // namespace rauzy
