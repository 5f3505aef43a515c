#include "rauzy/geometry.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace rauzy {

Rat ParameterPoint::base_arc_length() const {
  Rat s(0);
  for (int a : pi.top()) s += x[a];
  return s;
}

Rat ParameterPoint::last_width_min() const {
  return std::min(x[pi.last_top()], x[pi.last_bottom()]);
}

std::string ParameterPoint::str() const {
  std::ostringstream os;
  os << pi.str() << " ; x = [";
  for (size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << rat_str(x[i]);
  os << "] ; y = [";
  for (size_t i = 0; i < y.size(); ++i) os << (i ? ", " : "") << rat_str(y[i]);
  os << "]";
  return os.str();
}

namespace {

void check(bool ok, const std::string& clause) {
  if (!ok) throw domain_error("parameter point violates " + clause);
}

}  // namespace

void validate_parameter_point(const ParameterPoint& p) {
  const GP& pi = p.pi;
  size_t d = static_cast<size_t>(pi.size_alphabet());
  check(p.x.size() == d && p.y.size() == d, "vector sizes");
  for (size_t a = 0; a < d; ++a) check(p.x[a] > 0, "width positivity");
  Rat top_x(0), bot_x(0), top_y(0), bot_y(0);
  for (int a : pi.top()) {
    top_x += p.x[a];
    top_y += p.y[a];
  }
  for (int a : pi.bottom()) {
    bot_x += p.x[a];
    bot_y += p.y[a];
  }
  check(top_x == bot_x, "width equality");
  check(top_y == bot_y, "height equality");
  Rat acc(0);
  for (size_t i = 0; i + 1 < pi.ell(); ++i) {
    acc += p.y[pi.top()[i]];
    check(acc > 0, "top zipper inequality");
  }
  acc = 0;
  for (size_t i = 0; i + 1 < pi.m(); ++i) {
    acc += p.y[pi.bottom()[i]];
    check(acc < 0, "bottom zipper inequality");
  }
}

bool parameter_point_valid(const ParameterPoint& p) {
  try {
    validate_parameter_point(p);
    return true;
  } catch (const domain_error&) {
    return false;
  }
}

bool polytope_contains(const ParameterPoint& p) {
  if (!parameter_point_valid(p)) return false;
  Rat len = p.base_arc_length();
  return len > 1 && len < 1 + p.last_width_min();
}

FaceTag classify_face(const ParameterPoint& p) {
  Rat len = p.base_arc_length();
  if (len == 1) return FaceTag::BackwardTied;
  if (len == 1 + p.last_width_min()) return FaceTag::ForwardTied;
  return FaceTag::Interior;
}

ParameterPoint flow(const ParameterPoint& p, const Rat& s) {
  if (s <= 0) throw domain_error("flow scale must be positive");
  ParameterPoint q = p;
  for (Rat& v : q.x) v *= s;
  for (Rat& v : q.y) v /= s;
  return q;
}

std::pair<Side, ParameterPoint> induct(const ParameterPoint& p) {
  int wt = p.pi.last_top(), wb = p.pi.last_bottom();
  if (wt == wb) throw domain_error("induction undefined: reducible permutation");
  if (p.x[wt] == p.x[wb])
    throw domain_error("vanishing: last-letter widths tie, induction undefined");
  Side side = p.x[wt] > p.x[wb] ? Side::Top : Side::Bottom;
  int w = side == Side::Top ? wt : wb;
  int l = side == Side::Top ? wb : wt;
  ParameterPoint q;
  q.pi = rauzy_move(p.pi, side);
  q.x = p.x;
  q.y = p.y;
  q.x[w] -= p.x[l];
  q.y[l] += p.y[w];
  return {side, q};
}

Trajectory code_trajectory(const ParameterPoint& p0, size_t steps) {
  Trajectory out;
  ParameterPoint p = p0;
  Rat total_scale(1);
  for (size_t k = 0; k < steps; ++k) {
    Rat len = p.base_arc_length();
    Rat min = p.last_width_min();
    if (len <= min)
      throw domain_error("no forward face: base arc never reaches the window bound");
    Rat s = Rat(1) / (len - min);  // s with s*len = 1 + s*min
    p = flow(p, s);
    total_scale *= s;
    out.scales.push_back(total_scale);
    Side side;
    try {
      std::tie(side, p) = induct(p);
    } catch (const domain_error& e) {
      throw domain_error(std::string(e.what()) + " at step " + std::to_string(k));
    }
    out.word.push_back(side);
  }
  return out;
}

ParameterPoint normalize_point(const ParameterPoint& p) {
  Rat len = p.base_arc_length();
  Rat min = p.last_width_min();
  Rat s;
  if (len > min) {
    // window (1/len, 1/(len - min)); take the midpoint
    s = (Rat(1) / len + Rat(1) / (len - min)) / 2;
  } else {
    s = Rat(2) / len;
  }
  return flow(p, s);
}

bool word_is_neat(const RauzyWord& w) {
  for (size_t k = 1; k < w.size(); ++k) {
    bool match = true;
    for (size_t i = 0; i < k && match; ++i)
      if (w[i] != w[w.size() - k + i]) match = false;
    if (match) return false;
  }
  return true;
}

RauzyWord find_neat_positive_loop(const RauzyDiagram& d, int base, size_t max_len) {
  int dim = d.vertices[base].size_alphabet();
  struct Node {
    int vertex;
    IMat b;
    RauzyWord word;
  };
  std::deque<Node> queue;
  queue.push_back({base, IMat::identity(dim), {}});
  while (!queue.empty()) {
    Node n = std::move(queue.front());
    queue.pop_front();
    if (n.word.size() >= max_len) continue;
    for (Side s : {Side::Top, Side::Bottom}) {
      Node next;
      next.vertex = d.target(n.vertex, s);
      next.b = n.b * elementary_matrix(d.vertices[n.vertex], s);
      next.word = n.word;
      next.word.push_back(s);
      if (next.vertex == base) {
        bool positive = true;
        for (size_t i = 0; positive && i < next.b.rows(); ++i)
          for (size_t j = 0; j < next.b.cols(); ++j)
            if (next.b(i, j) <= 0) {
              positive = false;
              break;
            }
        if (positive && word_is_neat(next.word)) return next.word;
      }
      queue.push_back(std::move(next));
    }
  }
  throw limit_error("no neat positive loop within length " + std::to_string(max_len));
}

ParameterPoint interior_point(const GP& pi) {
  auto sp = suspension_point(pi);
  if (!sp) throw domain_error("no interior point: permutation is reducible");
  ParameterPoint p{pi, sp->x, sp->y};
  validate_parameter_point(p);
  return normalize_point(p);
}

ParameterPoint random_interior_point(const GP& pi, std::mt19937_64& rng) {
  auto sp = suspension_point(pi);
  if (!sp) throw domain_error("no interior point: permutation is reducible");
  int d = pi.size_alphabet();
  std::uniform_int_distribution<long> dist(1, 1 << 20);
  // Random positive widths, then rescale the top-flip letters to restore the
  // width equality (their total is positive for quadratic permutations).
  QVec x(d);
  for (int a = 0; a < d; ++a) x[a] = Rat(dist(rng), 1 << 10);
  if (pi.is_quadratic()) {
    Rat tf(0), bf(0);
    for (int a = 0; a < d; ++a) {
      if (pi.letter_type(a) == LetterType::TopFlip) tf += x[a];
      if (pi.letter_type(a) == LetterType::BottomFlip) bf += x[a];
    }
    Rat mu = bf / tf;
    for (int a = 0; a < d; ++a)
      if (pi.letter_type(a) == LetterType::TopFlip) x[a] *= mu;
  }
  // Random heights: jitter the feasible optimum within its slack, projected
  // back onto the height-equality hyperplane.
  QVec y = sp->y;
  Rat slack(1);  // suspension_point guarantees strict slack >= t* ; recompute a bound
  {
    // smallest zipper slack of y
    Rat acc(0);
    bool first = true;
    for (size_t i = 0; i + 1 < pi.ell(); ++i) {
      acc += y[pi.top()[i]];
      if (first || acc < slack) slack = acc;
      first = false;
    }
    acc = 0;
    for (size_t i = 0; i + 1 < pi.m(); ++i) {
      acc += y[pi.bottom()[i]];
      Rat v = -acc;
      if (first || v < slack) slack = v;
      first = false;
    }
    if (first) slack = 1;
  }
  QVec eq(d, Rat(0));
  for (int a : pi.top()) eq[a] += 1;
  for (int a : pi.bottom()) eq[a] -= 1;
  Rat eq_norm = dot(eq, eq);
  QVec delta(d);
  for (int a = 0; a < d; ++a) delta[a] = Rat(dist(rng) - (1 << 19), 1 << 20);
  if (eq_norm > 0) {
    Rat proj = dot(delta, eq) / eq_norm;
    for (int a = 0; a < d; ++a) delta[a] -= proj * eq[a];
  }
  // scale so each partial sum moves by less than slack / 2
  Rat max_abs(0);
  for (int a = 0; a < d; ++a) {
    Rat v = delta[a] < 0 ? -delta[a] : delta[a];
    if (v > max_abs) max_abs = v;
  }
  if (max_abs > 0) {
    Rat bound = slack / (Rat(2 * d) * max_abs);
    for (int a = 0; a < d; ++a) y[a] += delta[a] * bound;
  }
  ParameterPoint p{pi, x, y};
  validate_parameter_point(p);
  return normalize_point(p);
}

}  // namespace rauzy
