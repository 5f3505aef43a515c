#include "rauzy/cover.hpp"

#include <algorithm>

namespace rauzy {

namespace {

bool is_flip(const GP& pi, int letter) {
  return pi.letter_type(letter) != LetterType::Translation;
}

// Entry slots are (top position, sheet 0) and (bottom position, sheet 1);
// the remaining slots are exits.
bool slot_is_entry(const GP& pi, size_t pos, int sheet) {
  return pi.is_top_position(pos) == (sheet == 0);
}

}  // namespace

CoverStructure cover_structure(const GP& pi) {
  if (pi.is_abelian())
    throw domain_error("orientation double cover requires a quadratic permutation");
  CoverStructure cs;
  cs.base = pi;
  size_t n = pi.positions();
  cs.arc_of_slot.assign(n, {-1, -1});
  for (int a = 0; a < pi.size_alphabet(); ++a) {
    auto [p1, p2] = pi.occurrences(a);
    int f = is_flip(pi, a) ? 1 : 0;
    // lift j contains slot (occ1, j); crossing the rectangle switches the
    // sheet exactly when the letter is a flip letter.
    cs.arc_of_slot[p1][0] = CoverStructure::arc_id(a, 0);
    cs.arc_of_slot[p2][f] = CoverStructure::arc_id(a, 0);
    cs.arc_of_slot[p1][1] = CoverStructure::arc_id(a, 1);
    cs.arc_of_slot[p2][1 - f] = CoverStructure::arc_id(a, 1);
  }

  // Section combinatorics: entry slots along the two lifted arcs form the
  // top row, exit slots the bottom row. The second lift is traversed in
  // reversed base order (its chart is rotated by pi).
  std::vector<int> top, bottom;
  for (size_t p = 0; p < pi.ell(); ++p) top.push_back(cs.arc_of_slot[p][0]);
  for (size_t p = n; p-- > pi.ell();) top.push_back(cs.arc_of_slot[p][1]);
  for (size_t p = pi.ell(); p < n; ++p) bottom.push_back(cs.arc_of_slot[p][0]);
  for (size_t p = pi.ell(); p-- > 0;) bottom.push_back(cs.arc_of_slot[p][1]);
  std::vector<std::string> names(2 * pi.size_alphabet());
  for (int a = 0; a < pi.size_alphabet(); ++a) {
    names[CoverStructure::arc_id(a, 0)] = pi.name(a);
    names[CoverStructure::arc_id(a, 1)] = pi.name(a) + "*";
  }
  cs.cover_perm = GP(std::move(top), std::move(bottom), std::move(names));
  return cs;
}

GP double_cover(const GP& pi) {
  return cover_structure(pi).cover_perm;
}

IMat involution_matrix(const GP& pi) {
  if (pi.is_abelian()) throw domain_error("involution requires a quadratic permutation");
  int d = pi.size_alphabet();
  IMat m(2 * d, 2 * d);
  for (int a = 0; a < d; ++a) {
    m(CoverStructure::arc_id(a, 0), CoverStructure::arc_id(a, 1)) = -1;
    m(CoverStructure::arc_id(a, 1), CoverStructure::arc_id(a, 0)) = -1;
  }
  return m;
}

EigenSplit eigensplit(const GP& pi) {
  int d = pi.size_alphabet();
  EigenSplit es;
  es.plus_basis = IMat(d, 2 * d);
  es.minus_basis = IMat(d, 2 * d);
  for (int a = 0; a < d; ++a) {
    es.plus_basis(a, CoverStructure::arc_id(a, 0)) = 1;
    es.plus_basis(a, CoverStructure::arc_id(a, 1)) = -1;
    es.minus_basis(a, CoverStructure::arc_id(a, 0)) = 1;
    es.minus_basis(a, CoverStructure::arc_id(a, 1)) = 1;
  }
  return es;
}

ArcMove arc_action(const GP& pi, Side side) {
  CoverStructure cs = cover_structure(pi);
  MoveDetail md = rauzy_move_detail(pi, side);
  CoverStructure cs2 = cover_structure(md.next);
  int n_old = cs.arcs(), n_new = cs2.arcs();
  if (n_old != n_new) throw internal_error("arc count changed across a move");

  size_t wpos = side == Side::Top ? pi.ell() - 1 : pi.positions() - 1;
  size_t lpos = side == Side::Top ? pi.positions() - 1 : pi.ell() - 1;
  int A = cs.arc_of_slot[wpos][0], B = cs.arc_of_slot[wpos][1];
  int C = cs.arc_of_slot[lpos][0], D = cs.arc_of_slot[lpos][1];

  // Persistent-slot tracking: every arc except the two winner lifts keeps a
  // slot whose position survives the move (for the loser lifts, the slot at
  // the loser's other occurrence).
  auto new_class = [&](int arc) -> int {
    int letter = CoverStructure::arc_letter(arc);
    auto [p1, p2] = pi.occurrences(letter);
    for (size_t p : {p1, p2}) {
      if (md.pos_map[p] < 0) continue;
      for (int s : {0, 1}) {
        if (cs.arc_of_slot[p][s] != arc) continue;
        return cs2.arc_of_slot[md.pos_map[p]][s];
      }
    }
    throw internal_error("arc lost both slots across a move");
  };

  IMat m(n_old, n_new);
  for (int arc = 0; arc < n_old; ++arc) {
    if (arc == A || arc == B) continue;
    m(arc, new_class(arc)) = 1;
  }
  // Winner lifts split into the shortened winner lift plus the loser lift of
  // the matching sheet (polygon cut relation, per cover chart).
  int A_new = cs2.arc_of_slot[md.pos_map[wpos]][0];
  int B_new = cs2.arc_of_slot[md.pos_map[wpos]][1];
  m(A, A_new) = 1;
  m(A, new_class(C)) += 1;
  m(B, B_new) = 1;
  m(B, new_class(D)) += 1;
  return {m, md.next};
}

namespace {

// d x d matrix of the move in an iota-eigenbasis: rows express the old basis
// combination for each letter in the new one. The coefficient of the new
// basis vector for letter b is read off the lift-0 arc coordinate, with the
// lift-1 coordinate checked for consistency.
IMat eigen_move_matrix(const GP& pi, Side side, bool plus) {
  ArcMove am = arc_action(pi, side);
  int d = pi.size_alphabet();
  IMat out(d, d);
  for (int a = 0; a < d; ++a) {
    IVec row(2 * d, Int(0));
    int a0 = CoverStructure::arc_id(a, 0), a1 = CoverStructure::arc_id(a, 1);
    for (int col = 0; col < 2 * d; ++col)
      row[col] = am.mat(a0, col) + (plus ? -am.mat(a1, col) : am.mat(a1, col));
    for (int b = 0; b < d; ++b) {
      Int c0 = row[CoverStructure::arc_id(b, 0)];
      Int c1 = row[CoverStructure::arc_id(b, 1)];
      if (c0 + (plus ? c1 : -c1) != 0)
        throw internal_error("arc action is not involution-equivariant");
      out(a, b) = c0;
    }
  }
  return out;
}

}  // namespace

IMat plus_move_matrix(const GP& pi, Side side) {
  return eigen_move_matrix(pi, side, true);
}

IMat minus_move_matrix(const GP& pi, Side side) {
  return eigen_move_matrix(pi, side, false);
}

IMat plus_matrix_raw(const GP& pi, const RauzyWord& w) {
  IMat c = IMat::identity(pi.size_alphabet());
  GP cur = pi;
  for (Side s : w) {
    c = c * plus_move_matrix(cur, s);
    cur = rauzy_move(cur, s);
  }
  return c;
}

IMat minus_matrix_raw(const GP& pi, const RauzyWord& w) {
  IMat c = IMat::identity(pi.size_alphabet());
  GP cur = pi;
  for (Side s : w) {
    c = c * minus_move_matrix(cur, s);
    cur = rauzy_move(cur, s);
  }
  return c;
}

namespace {

FlatComplex cover_complex(const GP& pi, const CoverStructure& cs, const SuspensionPoint& sp) {
  FlatComplex fc;
  fc.num_arcs = cs.arcs();
  size_t n = pi.positions();
  // Exit slots lie on the bottom chains (traversed along the arc: orient +1),
  // entry slots on the top chains (orient -1).
  std::vector<FlatComplex::Entry> p1, p2;
  for (size_t p = pi.ell(); p < n; ++p) {
    int a = pi.at(p);
    p1.push_back({cs.arc_of_slot[p][0], +1, sp.x[a], sp.y[a]});
  }
  for (size_t p = pi.ell(); p-- > 0;) {
    int a = pi.at(p);
    p1.push_back({cs.arc_of_slot[p][0], -1, -sp.x[a], -sp.y[a]});
  }
  for (size_t p = pi.ell(); p-- > 0;) {
    int a = pi.at(p);
    p2.push_back({cs.arc_of_slot[p][1], +1, sp.x[a], sp.y[a]});
  }
  for (size_t p = pi.ell(); p < n; ++p) {
    int a = pi.at(p);
    p2.push_back({cs.arc_of_slot[p][1], -1, -sp.x[a], -sp.y[a]});
  }
  fc.faces.push_back(std::move(p1));
  fc.faces.push_back(std::move(p2));
  return fc;
}

IMat stack_rows(const std::vector<IVec>& rows, size_t cols) {
  IMat m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

// Subspace of the row space of `space` on which iota acts by `sign`.
IMat eigen_subspace(const IMat& space, const IMat& iota, int sign) {
  QMat sp = to_qmat(space);
  QMat im = to_qmat(space * iota);  // rows: iota applied to basis rows
  // Row combinations c with c.(im - sign*sp) = 0.
  QMat diff = sign == 1 ? im - sp : im + sp;
  QMat combos = right_kernel(diff.transpose());  // c diff = 0  <=>  diff^T c^T = 0
  QMat result = combos * sp;
  // integer, saturated
  IMat scaled(result.rows(), result.cols());
  for (size_t i = 0; i < result.rows(); ++i) {
    Int lcm(1);
    for (size_t j = 0; j < result.cols(); ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), result(i, j).get_den_mpz_t());
    for (size_t j = 0; j < result.cols(); ++j) scaled(i, j) = Rat(result(i, j) * Rat(lcm)).get_num();
  }
  return saturate_rows(scaled);
}

// Lattice basis of `space` whose first vector carries the class of r; the
// remaining rows project to a basis of the quotient lattice.
IMat quotient_complement(const IMat& space, const IVec& r) {
  // coordinates of r in the (saturated) row lattice
  QMat sp = to_qmat(space);
  QVec coords = solve(sp.transpose(), [&] {
    QVec b(r.size());
    for (size_t i = 0; i < r.size(); ++i) b[i] = Rat(r[i]);
    return b;
  }());
  IVec c(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].get_den() != 1) throw internal_error("relation not in the cycle lattice");
    c[i] = coords[i].get_num();
  }
  // Unimodular transform making c = (g, 0, ..., 0): repeated gcd steps.
  size_t k = c.size();
  IMat u = IMat::identity(k);
  for (size_t i = 1; i < k; ++i) {
    if (c[i] == 0) continue;
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), c[0].get_mpz_t(), c[i].get_mpz_t());
    Int a0 = c[0] / g, ai = c[i] / g;
    // rows 0 and i of u get the 2x2 unimodular [[s, t], [-ai, a0]]
    for (size_t j = 0; j < k; ++j) {
      Int u0 = u(0, j), ui = u(i, j);
      u(0, j) = s * u0 + t * ui;
      u(i, j) = -ai * u0 + a0 * ui;
    }
    c[0] = g;
    c[i] = 0;
  }
  IMat nb = u * space;
  IMat out(nb.rows() - 1, nb.cols());
  for (size_t i = 1; i < nb.rows(); ++i)
    for (size_t j = 0; j < nb.cols(); ++j) out(i - 1, j) = nb(i, j);
  return out;
}

IMat gram_of(const FlatComplex& fc, const TracedSurface& ts, const IMat& basis) {
  IMat g(basis.rows(), basis.rows());
  for (size_t i = 0; i < basis.rows(); ++i)
    for (size_t j = i + 1; j < basis.rows(); ++j) {
      Int v = cycle_intersection(fc, ts, basis.row(i), basis.row(j));
      g(i, j) = v;
      g(j, i) = -v;
    }
  return g;
}

IMat integer_cycle_space(const FlatComplex& fc, const TracedSurface& ts) {
  // boundary matrix: vertices x arcs
  IMat d(ts.num_vertices, fc.num_arcs);
  for (int a = 0; a < fc.num_arcs; ++a) {
    d(ts.arc_head[a], a) += 1;
    d(ts.arc_tail[a], a) -= 1;
  }
  QMat k = right_kernel(to_qmat(d));
  IMat scaled(k.rows(), k.cols());
  for (size_t i = 0; i < k.rows(); ++i) {
    Int lcm(1);
    for (size_t j = 0; j < k.cols(); ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), k(i, j).get_den_mpz_t());
    for (size_t j = 0; j < k.cols(); ++j) scaled(i, j) = Rat(k(i, j) * Rat(lcm)).get_num();
  }
  return saturate_rows(scaled);
}

}  // namespace

IntersectionForm intersection_form(const GP& pi) {
  auto sp = suspension_point(pi);
  if (!sp) throw domain_error("intersection_form: permutation is reducible");
  IntersectionForm out;
  out.cover = cover_structure(pi);
  FlatComplex fc = cover_complex(pi, out.cover, *sp);
  TracedSurface ts = trace_surface(fc);
  if (!ts.connected) throw internal_error("cover surface disconnected");

  IMat cycles = integer_cycle_space(fc, ts);
  IMat rel = face_relations(fc);
  IVec r0 = rel.row(0), r1 = rel.row(1);
  for (size_t j = 0; j < r0.size(); ++j)
    if (r0[j] + r1[j] != 0) throw internal_error("face relations do not cancel");
  out.face_relation = r0;

  IMat iota = involution_matrix(pi);
  IMat wplus = eigen_subspace(cycles, iota, +1);
  IMat wminus = eigen_subspace(cycles, iota, -1);

  // The face relation is anti-invariant (the involution swaps the two faces
  // and reverses arcs), so the plus piece needs no quotient.
  {
    IVec ir(r0.size(), Int(0));
    for (size_t i = 0; i < r0.size(); ++i)
      for (size_t j = 0; j < r0.size(); ++j) ir[j] += r0[i] * iota(i, j);
    bool anti = true, inv = true;
    for (size_t j = 0; j < r0.size(); ++j) {
      if (ir[j] != -r0[j]) anti = false;
      if (ir[j] != r0[j]) inv = false;
    }
    if (!anti && !inv) throw internal_error("face relation is not an eigenvector");
    if (anti) {
      out.plus_basis = wplus;
      out.minus_basis = quotient_complement(wminus, r0);
    } else {
      out.plus_basis = quotient_complement(wplus, r0);
      out.minus_basis = wminus;
    }
  }
  out.full_basis = quotient_complement(cycles, r0);
  out.gram_full = gram_of(fc, ts, out.full_basis);
  out.gram_plus = gram_of(fc, ts, out.plus_basis);
  out.gram_minus = gram_of(fc, ts, out.minus_basis);
  return out;
}

SingularityData cover_singularity_data(const GP& pi) {
  auto sp = suspension_point(pi);
  if (!sp) throw domain_error("cover_singularity_data: permutation is reducible");
  CoverStructure cs = cover_structure(pi);
  FlatComplex fc = cover_complex(pi, cs, *sp);
  TracedSurface ts = trace_surface(fc);
  if (!ts.connected) throw internal_error("cover surface disconnected");
  std::vector<long> orders;
  for (long ht : ts.angle_half_turns) {
    if (ht % 2 != 0) throw internal_error("cover with odd half-turn count");
    orders.push_back(ht / 2 - 1);
  }
  SingularityData sd = make_singularity_data(std::move(orders), true);
  if (ts.euler_characteristic != 2 - 2 * sd.genus)
    throw internal_error("cover Euler characteristic mismatch");
  return sd;
}

QMat transported_in_basis(const GP& pi, const RauzyWord& w, const IMat& basis_rows,
                          bool abelian_single_copy) {
  // Compose the arc transport along the word, then identify the end
  // permutation with pi through the unique letter re-indexing.
  size_t n = basis_rows.cols();
  IMat total = IMat::identity(n);
  GP cur = pi;
  for (Side s : w) {
    if (abelian_single_copy) {
      total = total * elementary_matrix(cur, s);
      cur = rauzy_move(cur, s);
    } else {
      ArcMove am = arc_action(cur, s);
      total = total * am.mat;
      cur = am.next;
    }
  }
  std::vector<int> p = pi.reindexing_from(cur);
  if (p.empty())
    throw domain_error("word does not close up at an equivalent permutation");
  IMat relabel(n, n);
  if (abelian_single_copy) {
    for (int a = 0; a < pi.size_alphabet(); ++a) relabel(a, p[a]) = 1;
  } else {
    for (int a = 0; a < pi.size_alphabet(); ++a)
      for (int j : {0, 1})
        relabel(CoverStructure::arc_id(a, j), CoverStructure::arc_id(p[a], j)) = 1;
  }
  return to_qmat(basis_rows * total * relabel);
}

namespace {

IMat cocycle_on_basis(const GP& pi, const RauzyWord& w, const IMat& basis,
                      bool abelian_single_copy) {
  QMat transported = transported_in_basis(pi, w, basis, abelian_single_copy);
  // Solve C * basis = transported row by row.
  QMat bt = to_qmat(basis).transpose();
  QMat c(basis.rows(), basis.rows());
  for (size_t i = 0; i < basis.rows(); ++i) {
    QVec rhs(bt.rows());
    for (size_t j = 0; j < bt.rows(); ++j) rhs[j] = transported(i, j);
    QVec sol = solve(bt, rhs);
    for (size_t j = 0; j < basis.rows(); ++j) c(i, j) = sol[j];
  }
  return to_imat(c);
}

}  // namespace

IMat plus_matrix(const GP& pi, const RauzyWord& w) {
  IntersectionForm f = intersection_form(pi);
  return cocycle_on_basis(pi, w, f.plus_basis, false);
}

IMat minus_matrix(const GP& pi, const RauzyWord& w) {
  IntersectionForm f = intersection_form(pi);
  return cocycle_on_basis(pi, w, f.minus_basis, false);
}

AbelianHomology abelian_homology(const GP& pi) {
  if (!pi.is_abelian()) throw domain_error("abelian_homology requires an abelian permutation");
  auto sp = suspension_point(pi);
  if (!sp) throw domain_error("abelian_homology: permutation is reducible");
  FlatComplex fc = suspension_complex(pi, *sp);
  TracedSurface ts = trace_surface(fc);
  AbelianHomology h;
  IMat cycles = integer_cycle_space(fc, ts);
  // The single polygon relation vanishes identically for abelian complexes.
  IMat rel = face_relations(fc);
  for (size_t j = 0; j < rel.cols(); ++j)
    if (rel(0, j) != 0) throw internal_error("abelian polygon relation must vanish");
  h.basis = cycles;
  h.gram = gram_of(fc, ts, cycles);
  return h;
}

IMat abelian_absolute_matrix(const GP& pi, const RauzyWord& w) {
  AbelianHomology h = abelian_homology(pi);
  return cocycle_on_basis(pi, w, h.basis, true);
}

}  // namespace rauzy
