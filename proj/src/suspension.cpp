#include "rauzy/suspension.hpp"

#include <algorithm>
#include <map>

#include "rauzy/simplex.hpp"

namespace rauzy {

namespace {

// ---- zipper feasibility system -------------------------------------------
//
// The x side (positivity + width equality) is always strictly feasible for a
// valid permutation, so irreducibility is decided by the y side alone:
//   top partial sums   sum_{j<=i} y_{pi(j)} > 0   for 1 <= i < l
//   bottom partial sums                       < 0   for 1 <= i < m
//   height equality    sum_top y = sum_bottom y
// Strictness is tested by maximizing a slack t with |y| <= 1, t <= 1.

struct YSystem {
  QMat ineq;  // rows: partial-sum functionals, sign-normalized to "> 0"
  QVec eq;    // height equality functional (= 0)
};

YSystem y_system(const GP& pi) {
  int d = pi.size_alphabet();
  YSystem s;
  std::vector<QVec> rows;
  QVec acc(d, Rat(0));
  for (size_t i = 0; i + 1 < pi.ell(); ++i) {
    acc[pi.top()[i]] += 1;
    rows.push_back(acc);
  }
  acc.assign(d, Rat(0));
  for (size_t i = 0; i + 1 < pi.m(); ++i) {
    acc[pi.bottom()[i]] += 1;
    QVec neg(d);
    for (int j = 0; j < d; ++j) neg[j] = -acc[j];
    rows.push_back(neg);
  }
  s.ineq = QMat(rows.size(), d);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int j = 0; j < d; ++j) s.ineq(r, j) = rows[r][j];
  s.eq.assign(d, Rat(0));
  for (int a : pi.top()) s.eq[a] += 1;
  for (int a : pi.bottom()) s.eq[a] -= 1;
  return s;
}

// Maximize t subject to ineq . y >= t, eq . y = 0, -1 <= y <= 1, 0 <= t <= 1.
// Returns (t*, y*).
std::pair<Rat, QVec> y_slack_optimum(const GP& pi) {
  YSystem s = y_system(pi);
  int d = pi.size_alphabet();
  size_t m = s.ineq.rows();
  // Variables: u_j = y_j + 1 in [0, 2], and t >= 0.
  LinearProgram lp;
  size_t rows = m + 1 + d + 1;
  lp.A = QMat(rows, d + 1);
  lp.b.assign(rows, Rat(0));
  lp.rel.assign(rows, Rel::LE);
  size_t r = 0;
  for (size_t i = 0; i < m; ++i, ++r) {
    Rat shift(0);
    for (int j = 0; j < d; ++j) {
      lp.A(r, j) = s.ineq(i, j);
      shift += s.ineq(i, j);
    }
    lp.A(r, d) = -1;
    lp.b[r] = shift;  // ineq.(u - 1) - t >= 0
    lp.rel[r] = Rel::GE;
  }
  {
    Rat shift(0);
    for (int j = 0; j < d; ++j) {
      lp.A(r, j) = s.eq[j];
      shift += s.eq[j];
    }
    lp.b[r] = shift;
    lp.rel[r] = Rel::EQ;
    ++r;
  }
  for (int j = 0; j < d; ++j, ++r) {
    lp.A(r, j) = 1;
    lp.b[r] = 2;
    lp.rel[r] = Rel::LE;
  }
  lp.A(r, d) = 1;
  lp.b[r] = 1;
  lp.rel[r] = Rel::LE;
  lp.c.assign(d + 1, Rat(0));
  lp.c[d] = 1;
  LPResult res = lp_solve(lp);
  if (!res.feasible || res.unbounded) throw internal_error("slack LP must be feasible/bounded");
  QVec y(d);
  for (int j = 0; j < d; ++j) y[j] = res.x[j] - 1;
  return {res.objective, y};
}

}  // namespace

bool is_irreducible(const GP& pi) {
  return y_slack_optimum(pi).first > 0;
}

bool is_irreducible_vertex_oracle(const GP& pi) {
  YSystem s = y_system(pi);
  int d = pi.size_alphabet();
  size_t m = s.ineq.rows();
  // A z <= b over z = (y, t).
  size_t rows = m + 2 + 2 * d + 2;
  QMat A(rows, d + 1);
  QVec b(rows, Rat(0));
  size_t r = 0;
  for (size_t i = 0; i < m; ++i, ++r) {
    for (int j = 0; j < d; ++j) A(r, j) = -s.ineq(i, j);
    A(r, d) = 1;  // t - ineq.y <= 0
  }
  for (int sgn : {1, -1}) {
    for (int j = 0; j < d; ++j) A(r, j) = sgn * s.eq[j];
    b[r] = 0;
    ++r;
  }
  for (int j = 0; j < d; ++j) {
    A(r, j) = 1;
    b[r] = 1;
    ++r;
    A(r, j) = -1;
    b[r] = 1;
    ++r;
  }
  A(r, d) = 1;
  b[r] = 1;
  ++r;
  A(r, d) = -1;
  b[r] = 0;
  ++r;
  QVec c(d + 1, Rat(0));
  c[d] = 1;
  auto best = vertex_enumeration_max(A, b, c);
  if (!best) throw internal_error("slack polytope cannot be empty");
  return best->first > 0;
}

std::optional<SuspensionPoint> suspension_point(const GP& pi) {
  auto [t, y] = y_slack_optimum(pi);
  if (t <= 0) return std::nullopt;
  SuspensionPoint sp;
  sp.y = y;
  // Balanced positive widths: flip letters weighted so the width equality
  // holds exactly.
  int d = pi.size_alphabet();
  long ntf = 0, nbf = 0;
  for (int a = 0; a < d; ++a) {
    LetterType lt = pi.letter_type(a);
    if (lt == LetterType::TopFlip) ++ntf;
    if (lt == LetterType::BottomFlip) ++nbf;
  }
  sp.x.assign(d, Rat(0));
  for (int a = 0; a < d; ++a) {
    switch (pi.letter_type(a)) {
      case LetterType::Translation: sp.x[a] = Rat(nbf + ntf + 1); break;
      case LetterType::TopFlip: sp.x[a] = Rat(nbf == 0 ? 1 : nbf); break;
      case LetterType::BottomFlip: sp.x[a] = Rat(ntf == 0 ? 1 : ntf); break;
    }
  }
  return sp;
}

// ---- flat complexes -------------------------------------------------------

FlatComplex suspension_complex(const GP& pi, const SuspensionPoint& sp) {
  FlatComplex fc;
  fc.num_arcs = pi.size_alphabet();
  std::vector<FlatComplex::Entry> face;
  // Arc orientation: the first occurrence of a letter, drawn rightward.
  // The partner occurrence matches it (translation) or reverses it (flip).
  auto occ_dir = [&](size_t p) {
    auto [p1, p2] = pi.occurrences(pi.at(p));
    if (p == p1) return 1;
    bool same_row = pi.is_top_position(p1) == pi.is_top_position(p2);
    return same_row ? -1 : 1;
  };
  // Bottom chain, left to right.
  for (size_t i = 0; i < pi.m(); ++i) {
    size_t p = pi.ell() + i;
    int a = pi.at(p);
    face.push_back({a, occ_dir(p), sp.x[a], sp.y[a]});
  }
  // Top chain, right to left.
  for (size_t i = pi.ell(); i-- > 0;) {
    int a = pi.at(i);
    face.push_back({a, -occ_dir(i), -sp.x[a], -sp.y[a]});
  }
  fc.faces.push_back(std::move(face));
  return fc;
}

IMat face_relations(const FlatComplex& fc) {
  IMat r(fc.faces.size(), fc.num_arcs);
  for (size_t f = 0; f < fc.faces.size(); ++f)
    for (const auto& e : fc.faces[f]) r(f, e.arc) += e.orient;
  return r;
}

namespace {

struct HalfEdge {
  size_t face, idx;
};

struct Dcel {
  const FlatComplex* fc;
  std::vector<std::pair<size_t, size_t>> edges;  // global half-edge ids -> (face, idx)
  std::vector<size_t> face_start;                // global id of (face, 0)
  std::vector<size_t> twin;                      // global id -> global id

  size_t gid(size_t f, size_t k) const { return face_start[f] + k; }
  size_t next(size_t h) const {
    auto [f, k] = edges[h];
    return gid(f, (k + 1) % fc->faces[f].size());
  }
  size_t prev(size_t h) const {
    auto [f, k] = edges[h];
    return gid(f, (k + fc->faces[f].size() - 1) % fc->faces[f].size());
  }
  const FlatComplex::Entry& entry(size_t h) const {
    auto [f, k] = edges[h];
    return fc->faces[f][k];
  }
};

Dcel build_dcel(const FlatComplex& fc) {
  Dcel d;
  d.fc = &fc;
  for (size_t f = 0; f < fc.faces.size(); ++f) {
    d.face_start.push_back(d.edges.size());
    for (size_t k = 0; k < fc.faces[f].size(); ++k) d.edges.push_back({f, k});
  }
  std::vector<std::vector<size_t>> by_arc(fc.num_arcs);
  for (size_t h = 0; h < d.edges.size(); ++h) by_arc[d.entry(h).arc].push_back(h);
  d.twin.assign(d.edges.size(), SIZE_MAX);
  for (int a = 0; a < fc.num_arcs; ++a) {
    if (by_arc[a].size() != 2) throw internal_error("arc must have exactly two sides");
    size_t h0 = by_arc[a][0], h1 = by_arc[a][1];
    if (d.entry(h0).orient == d.entry(h1).orient)
      throw internal_error("complex not orientable: twin sides traverse arc equally");
    d.twin[h0] = h1;
    d.twin[h1] = h0;
  }
  return d;
}

struct Pt {
  Rat x, y;
};

Rat cross(const Pt& a, const Pt& b) {
  return a.x * b.y - a.y * b.x;
}

// True if r lies strictly inside the counterclockwise sector from a to b.
// Preconditions: r is parallel to neither a nor b, and b is not parallel to a
// in the same direction.
bool sector_contains(const Pt& a, const Pt& b, const Pt& r) {
  auto half = [&](const Pt& u) {
    Rat c = cross(a, u);
    if (c > 0) return 0;
    if (c == 0) return 1;  // opposite direction to a
    return 2;
  };
  int hr = half(r), hb = half(b);
  if (hr != hb) return hr < hb;
  return cross(r, b) > 0;
}

}  // namespace

TracedSurface trace_surface(const FlatComplex& fc) {
  Dcel d = build_dcel(fc);
  size_t H = d.edges.size();
  TracedSurface ts;
  ts.arc_tail.assign(fc.num_arcs, -1);
  ts.arc_head.assign(fc.num_arcs, -1);

  // Vertex orbits of h -> next(twin(h)) share the origin of h.
  std::vector<int> vert(H, -1);
  int nv = 0;
  for (size_t h0 = 0; h0 < H; ++h0) {
    if (vert[h0] >= 0) continue;
    size_t h = h0;
    std::vector<std::pair<int, int>> link;
    do {
      vert[h] = nv;
      const auto& e = d.entry(h);
      link.push_back({e.arc, e.orient == 1 ? 0 : 1});  // prong: arc end at origin
      h = d.next(d.twin[h]);
    } while (h != h0);
    ts.links.push_back(std::move(link));
    ++nv;
  }
  ts.num_vertices = nv;
  for (size_t h = 0; h < H; ++h) {
    const auto& e = d.entry(h);
    if (e.orient == 1) ts.arc_tail[e.arc] = vert[h];
    else ts.arc_head[e.arc] = vert[h];
  }

  // Reference ray steeper than every side; then each corner sector crosses
  // the ray pair {R, -R} exactly (angle / pi) times in total.
  Rat K(1);
  for (const auto& face : fc.faces)
    for (const auto& e : face) {
      Rat ax = e.vx < 0 ? -e.vx : e.vx, ay = e.vy < 0 ? -e.vy : e.vy;
      if (ax == 0) throw internal_error("vertical polygon side");
      Rat slope = ay / ax;
      if (slope + 1 > K) K = slope + 1;
    }
  Pt R{Rat(1), K}, Rneg{Rat(-1), -K};

  ts.angle_half_turns.assign(nv, 0);
  for (size_t h = 0; h < H; ++h) {
    // Corner at origin(h): sector CCW from +v_h to -v_{prev(h)}.
    const auto& eh = d.entry(h);
    const auto& ep = d.entry(d.prev(h));
    Pt a{eh.vx, eh.vy}, b{-ep.vx, -ep.vy};
    long cnt = (sector_contains(a, b, R) ? 1 : 0) + (sector_contains(a, b, Rneg) ? 1 : 0);
    ts.angle_half_turns[vert[h]] += cnt;
  }

  // Euler characteristic and connectivity.
  long V = nv, E = fc.num_arcs, F = static_cast<long>(fc.faces.size());
  ts.euler_characteristic = V - E + F;
  std::vector<int> comp(nv, -1);
  std::vector<int> stack;
  comp[0] = 0;
  stack.push_back(0);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int a = 0; a < fc.num_arcs; ++a) {
      for (int w : {ts.arc_tail[a], ts.arc_head[a]}) {
        if ((ts.arc_tail[a] == v || ts.arc_head[a] == v) && comp[w] < 0) {
          comp[w] = 0;
          stack.push_back(w);
        }
      }
    }
  }
  ts.connected = std::all_of(comp.begin(), comp.end(), [](int c) { return c >= 0; });
  return ts;
}

Int cycle_intersection(const FlatComplex& fc, const TracedSurface& ts, const IVec& z1,
                       const IVec& z2) {
  // Pinned by the torus pinning test in the unit suite.
  static constexpr int kGlobalSign = 1;

  struct Slot {
    // circle position: prong index + tier
    size_t prong;
    Rat tier;
    bool operator<(const Slot& o) const {
      if (prong != o.prong) return prong < o.prong;
      return tier < o.tier;
    }
  };
  struct Chord {
    Slot in, out;
  };

  Int total(0);
  Int max_mult(1);
  for (const IVec* z : {&z1, &z2})
    for (const Int& v : *z) {
      Int a = v < 0 ? Int(-v) : v;
      if (a > max_mult) max_mult = a;
    }
  Rat denom = Rat(8) * Rat(max_mult + 2);

  for (int v = 0; v < ts.num_vertices; ++v) {
    const auto& link = ts.links[v];
    auto chords_of = [&](const IVec& z, int lane) {
      std::vector<Slot> ins, outs;
      for (size_t pi = 0; pi < link.size(); ++pi) {
        auto [arc, end] = link[pi];
        Int n = z[arc];
        if (n == 0) continue;
        long mult = std::abs(static_cast<long>(n.get_si()));
        bool arc_out = (end == 0) == (n > 0);  // tail end with positive weight: outgoing
        for (long k = 0; k < mult; ++k) {
          // distance from the arc line: lane 0 strictly outside lane 1
          Rat dist = Rat(2 - lane) * Rat(max_mult + 2) + Rat(k + 1);
          // tail ends offset CCW (+), head ends CW (-)
          Rat tier = (end == 0 ? dist : -dist) / denom;
          if (arc_out) outs.push_back({pi, tier});
          else ins.push_back({pi, tier});
        }
      }
      if (ins.size() != outs.size()) throw internal_error("not a cycle at vertex");
      std::vector<Chord> ch;
      for (size_t i = 0; i < ins.size(); ++i) ch.push_back({ins[i], outs[i]});
      return ch;
    };
    std::vector<Chord> c1 = chords_of(z1, 0), c2 = chords_of(z2, 1);
    if (c1.empty() || c2.empty()) continue;
    size_t P = link.size();
    auto circ_lt = [&](const Slot& a, const Slot& b) { return a < b; };
    auto in_arc = [&](const Slot& a, const Slot& b, const Slot& x) {
      // x strictly inside the CCW arc from a to b
      if (circ_lt(a, b)) return circ_lt(a, x) && circ_lt(x, b);
      return circ_lt(a, x) || circ_lt(x, b);
    };
    (void)P;
    for (const Chord& p : c1)
      for (const Chord& q : c2) {
        bool cin = in_arc(p.in, p.out, q.in);
        bool dout = in_arc(p.in, p.out, q.out);
        if (cin == dout) continue;
        total += kGlobalSign * (cin ? 1 : -1);
      }
  }
  return total;
}

SingularityData singularity_data(const GP& pi) {
  auto sp = suspension_point(pi);
  if (!sp) throw domain_error("singularity_data: permutation is reducible: " + pi.str());
  FlatComplex fc = suspension_complex(pi, *sp);
  TracedSurface ts = trace_surface(fc);
  if (!ts.connected) throw internal_error("suspension surface disconnected");
  std::vector<long> orders;
  bool abelian = pi.is_abelian();
  for (long ht : ts.angle_half_turns) {
    if (ht < 1) throw internal_error("cone angle must be positive");
    if (abelian) {
      if (ht % 2 != 0) throw internal_error("abelian suspension with odd half-turn count");
      orders.push_back(ht / 2 - 1);
    } else {
      orders.push_back(ht - 2);
    }
  }
  SingularityData sd = make_singularity_data(std::move(orders), abelian);
  if (ts.euler_characteristic != 2 - 2 * sd.genus)
    throw internal_error("Euler characteristic disagrees with cone angles");
  return sd;
}

}  // namespace rauzy
