#pragma once

#include <random>

#include "rauzy/induction.hpp"
#include "rauzy/matrix.hpp"
#include "rauzy/perm.hpp"
#include "rauzy/suspension.hpp"

namespace rauzy {

// Exact width/height parameters of a zippered-rectangle construction.
struct ParameterPoint {
  GP pi;
  QVec x, y;  // indexed by letter id

  Rat base_arc_length() const;                // |I| = sum of top widths
  Rat last_width_min() const;                 // min(x_lastTop, x_lastBottom)
  std::string str() const;
};

// Checks the ParameterPoint invariants (positivity, width/height equalities,
// zipper inequalities); throws domain_error naming the violated clause.
void validate_parameter_point(const ParameterPoint& p);
bool parameter_point_valid(const ParameterPoint& p);

enum class FaceTag { ForwardTied, BackwardTied, Interior };

// Strict test of all polytope conditions including the base-arc
// normalisation window 1 < |I| < 1 + min.
bool polytope_contains(const ParameterPoint& p);

FaceTag classify_face(const ParameterPoint& p);

// Teichmueller flow by rational scale s = e^t: x -> s x, y -> y / s.
ParameterPoint flow(const ParameterPoint& p, const Rat& s);

// One induction step on parameters; the winner is the side with the larger
// last-letter width. Throws domain_error("vanishing ...") on ties.
std::pair<Side, ParameterPoint> induct(const ParameterPoint& p);

struct Trajectory {
  RauzyWord word;
  QVec scales;  // cumulative face-crossing scales, strictly increasing
};

// Alternates (flow to the forward face, induct) for `steps` iterations.
Trajectory code_trajectory(const ParameterPoint& p, size_t steps);

// Flows into the normalisation window: midpoint scale of the valid open
// interval, or 2/|I| when the window is one-sided.
ParameterPoint normalize_point(const ParameterPoint& p);

// Shortest directed loop at `base` whose matrix is strictly positive and
// which is neat (no proper word is both prefix and suffix). Search in
// length-lexicographic order; limit_error if none within max_len.
RauzyWord find_neat_positive_loop(const RauzyDiagram& d, int base, size_t max_len);

bool word_is_neat(const RauzyWord& w);

// Deterministic interior parameter point (from the feasibility optimum),
// flowed into the normalisation window.
ParameterPoint interior_point(const GP& pi);

// Random rational interior point; deterministic in the generator state.
ParameterPoint random_interior_point(const GP& pi, std::mt19937_64& rng);

}  // namespace rauzy
