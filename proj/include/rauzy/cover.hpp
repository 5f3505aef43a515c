#pragma once

#include "rauzy/induction.hpp"
#include "rauzy/matrix.hpp"
#include "rauzy/perm.hpp"
#include "rauzy/suspension.hpp"

namespace rauzy {

// Orientation double cover of a quadratic permutation, presented through the
// two lifts of the base arc. Arcs are indexed 2*letter + lift. A slot is a
// (position, sheet) pair; every rectangle lift has one entry slot and one
// exit slot, and arcs are flow-oriented (entry to exit), so each arc has
// period x_alpha + i y_alpha in the cover charts.
struct CoverStructure {
  GP base;
  // arc id occupying each slot: arc_of_slot[position][sheet]
  std::vector<std::array<int, 2>> arc_of_slot;
  GP cover_perm;  // 2d-letter abelian permutation of the two-arc section

  int arcs() const { return 2 * base.size_alphabet(); }
  static int arc_id(int letter, int lift) { return 2 * letter + lift; }
  static int arc_letter(int arc) { return arc / 2; }
  static int arc_lift(int arc) { return arc % 2; }
};

// Requires a quadratic permutation (domain_error on abelian input).
CoverStructure cover_structure(const GP& pi);

// The 2d-letter abelian permutation realizing the two-copy rectangle gluing.
GP double_cover(const GP& pi);

// Involution on the arc module: a_{alpha,j} -> -a_{alpha,1-j}. In the
// flow-oriented basis both eigenspaces have the uniform description
//   minus: a^(1) + a^(2),  plus: a^(1) - a^(2)
// (per-letter sign twists translate this to type-dependent conventions).
IMat involution_matrix(const GP& pi);

struct EigenSplit {
  IMat plus_basis;   // rows: d integer arc combinations fixed by iota
  IMat minus_basis;  // rows: d combinations negated by iota
};
EigenSplit eigensplit(const GP& pi);

// Arc transport of one induction step: rows express old arc classes in the
// new arc classes. Entries are 0/1; the two winner-lift rows have two ones.
struct ArcMove {
  IMat mat;
  GP next;
};
ArcMove arc_action(const GP& pi, Side side);

// Per-move matrices in the eigensplit coordinates (d x d, row convention,
// composing left to right). The minus one equals the elementary matrix.
IMat plus_move_matrix(const GP& pi, Side side);
IMat minus_move_matrix(const GP& pi, Side side);

// Relative (unprojected) composites over a word; any composable word.
IMat plus_matrix_raw(const GP& pi, const RauzyWord& w);
IMat minus_matrix_raw(const GP& pi, const RauzyWord& w);

// Absolute homology of the cover with its intersection pairing, split into
// the involution eigenpieces. Bases are integer cycles in arc coordinates.
struct IntersectionForm {
  CoverStructure cover;
  IMat full_basis, gram_full;    // H1 of the cover (rank 2g-hat)
  IMat plus_basis, gram_plus;    // invariant piece (rank 2g)
  IMat minus_basis, gram_minus;  // anti-invariant piece (rank 2g-hat - 2g)
  IVec face_relation;            // the one relation among arc cycles
};
IntersectionForm intersection_form(const GP& pi);

// Singularity data of the cover surface (abelian, computed on the honest
// two-polygon complex).
SingularityData cover_singularity_data(const GP& pi);

// Kontsevich-Zorich cocycle matrices on the absolute plus / minus pieces
// over a loop word (the word must return to a permutation equivalent to pi).
// Bases are the deterministic ones from intersection_form(pi).
IMat plus_matrix(const GP& pi, const RauzyWord& w);
IMat minus_matrix(const GP& pi, const RauzyWord& w);

// For abelian permutations: the absolute homology action over a loop word
// (the Rauzy-Veech matrix pushed to the quotient). Also exposed through the
// same intersection machinery on the one-polygon complex.
struct AbelianHomology {
  IMat basis, gram;
};
AbelianHomology abelian_homology(const GP& pi);
IMat abelian_absolute_matrix(const GP& pi, const RauzyWord& w);

// Shared implementation detail: the cocycle on an explicit cycle subspace.
// Exposed for the Lyapunov estimator, which caches per-edge matrices.
QMat transported_in_basis(const GP& pi, const RauzyWord& w, const IMat& basis_rows,
                          bool abelian_single_copy);

}  // namespace rauzy
