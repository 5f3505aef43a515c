#pragma once

#include <optional>
#include <utility>

#include "rauzy/matrix.hpp"

namespace rauzy {

enum class Rel { LE, EQ, GE };

// maximize c.x  subject to  A_i . x  rel_i  b_i  and  x >= 0.
struct LinearProgram {
  QMat A;
  QVec b;
  std::vector<Rel> rel;
  QVec c;
};

struct LPResult {
  bool feasible = false;
  bool unbounded = false;
  Rat objective;
  QVec x;
};

// Exact two-phase simplex with Bland's rule.
LPResult lp_solve(const LinearProgram& lp);

// Brute-force oracle: maximize c.x over { x : A x <= b } (x unrestricted) by
// enumerating all basic solutions (square subsystems). Small dimensions only.
// Returns nullopt if infeasible. Assumes the optimum is attained at a vertex
// (caller must bound the feasible set in the direction of c).
std::optional<std::pair<Rat, QVec>> vertex_enumeration_max(const QMat& A, const QVec& b,
                                                           const QVec& c);

}  // namespace rauzy
