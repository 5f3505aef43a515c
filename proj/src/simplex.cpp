#include "rauzy/simplex.hpp"

#include <algorithm>

namespace rauzy {

namespace {

// Tableau rows: m constraint rows plus objective row; columns: variables,
// slacks/surpluses, artificials, rhs.
struct Tableau {
  QMat t;
  std::vector<size_t> basis;
  size_t m, n_total;

  bool pivot_step(const std::vector<bool>& allowed) {
    size_t obj = m;
    // Bland: smallest-index entering column with positive reduced profit.
    size_t enter = n_total;
    for (size_t j = 0; j < n_total; ++j) {
      if (!allowed[j]) continue;
      if (t(obj, j) > 0) {
        enter = j;
        break;
      }
    }
    if (enter == n_total) return false;  // optimal
    size_t leave = m;
    Rat best;
    for (size_t i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      Rat ratio = t(i, n_total) / t(i, enter);
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw limit_error("lp_solve: unbounded");
    pivot(leave, enter);
    return true;
  }

  void pivot(size_t r, size_t c) {
    Rat inv = t(r, c);
    for (size_t j = 0; j <= n_total; ++j) t(r, j) /= inv;
    for (size_t i = 0; i <= m; ++i) {
      if (i == r || t(i, c) == 0) continue;
      Rat f = t(i, c);
      for (size_t j = 0; j <= n_total; ++j) t(i, j) -= f * t(r, j);
    }
    basis[r] = c;
  }
};

}  // namespace

LPResult lp_solve(const LinearProgram& lp) {
  size_t m = lp.A.rows(), n = lp.A.cols();
  // Row normal form with b >= 0.
  QMat A = lp.A;
  QVec b = lp.b;
  std::vector<Rel> rel = lp.rel;
  for (size_t i = 0; i < m; ++i) {
    if (b[i] < 0) {
      for (size_t j = 0; j < n; ++j) A(i, j) = -A(i, j);
      b[i] = -b[i];
      if (rel[i] == Rel::LE) rel[i] = Rel::GE;
      else if (rel[i] == Rel::GE) rel[i] = Rel::LE;
    }
  }
  size_t n_slack = 0, n_art = 0;
  for (Rel r : rel) {
    if (r != Rel::EQ) ++n_slack;
    if (r != Rel::LE) ++n_art;
  }
  size_t n_total = n + n_slack + n_art;
  Tableau tab;
  tab.m = m;
  tab.n_total = n_total;
  tab.t = QMat(m + 1, n_total + 1);
  tab.basis.assign(m, 0);
  size_t slack_at = n, art_at = n + n_slack;
  std::vector<bool> is_art(n_total, false);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) tab.t(i, j) = A(i, j);
    tab.t(i, n_total) = b[i];
    if (rel[i] == Rel::LE) {
      tab.t(i, slack_at) = 1;
      tab.basis[i] = slack_at++;
    } else if (rel[i] == Rel::GE) {
      tab.t(i, slack_at++) = -1;
      tab.t(i, art_at) = 1;
      is_art[art_at] = true;
      tab.basis[i] = art_at++;
    } else {
      tab.t(i, art_at) = 1;
      is_art[art_at] = true;
      tab.basis[i] = art_at++;
    }
  }

  LPResult res;
  std::vector<bool> allowed(n_total, true);
  if (n_art > 0) {
    // Phase 1: maximize -sum(artificials).
    for (size_t j = 0; j < n_total; ++j)
      tab.t(m, j) = is_art[j] ? Rat(-1) : Rat(0);
    tab.t(m, n_total) = 0;
    // Express objective in terms of the current basis.
    for (size_t i = 0; i < m; ++i) {
      if (!is_art[tab.basis[i]]) continue;
      for (size_t j = 0; j <= n_total; ++j) tab.t(m, j) += tab.t(i, j);
    }
    while (tab.pivot_step(allowed)) {
    }
    if (tab.t(m, n_total) != 0) {
      res.feasible = false;
      return res;
    }
    // Pivot remaining artificials out of the basis where possible.
    for (size_t i = 0; i < m; ++i) {
      if (!is_art[tab.basis[i]]) continue;
      size_t enter = n_total;
      for (size_t j = 0; j < n + n_slack; ++j)
        if (tab.t(i, j) != 0) {
          enter = j;
          break;
        }
      if (enter != n_total) tab.pivot(i, enter);
    }
    for (size_t j = 0; j < n_total; ++j)
      if (is_art[j]) allowed[j] = false;
  }

  // Phase 2.
  for (size_t j = 0; j <= n_total; ++j) tab.t(m, j) = 0;
  for (size_t j = 0; j < n; ++j) tab.t(m, j) = lp.c[j];
  for (size_t i = 0; i < m; ++i) {
    size_t bj = tab.basis[i];
    if (bj < n && lp.c[bj] != 0) {
      Rat f = lp.c[bj];
      for (size_t j = 0; j <= n_total; ++j) tab.t(m, j) -= f * tab.t(i, j);
    }
  }
  try {
    while (tab.pivot_step(allowed)) {
    }
  } catch (const limit_error&) {
    res.feasible = true;
    res.unbounded = true;
    return res;
  }
  res.feasible = true;
  res.objective = -tab.t(m, n_total);
  res.x.assign(n, Rat(0));
  for (size_t i = 0; i < m; ++i)
    if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.t(i, n_total);
  return res;
}

std::optional<std::pair<Rat, QVec>> vertex_enumeration_max(const QMat& A, const QVec& b,
                                                           const QVec& c) {
  size_t m = A.rows(), n = A.cols();
  std::optional<std::pair<Rat, QVec>> best;
  std::vector<size_t> idx(n);
  // Iterate over all n-subsets of rows.
  std::vector<size_t> comb;
  auto consider = [&](const std::vector<size_t>& rows) {
    QMat sq(n, n);
    QVec rhs(n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) sq(i, j) = A(rows[i], j);
      rhs[i] = b[rows[i]];
    }
    if (rank(sq) != n) return;
    QVec x;
    try {
      x = solve(sq, rhs);
    } catch (const domain_error&) {
      return;
    }
    for (size_t i = 0; i < m; ++i) {
      Rat lhs(0);
      for (size_t j = 0; j < n; ++j) lhs += A(i, j) * x[j];
      if (lhs > b[i]) return;
    }
    Rat val = dot(c, x);
    if (!best || val > best->first) best = {val, x};
  };
  // Simple recursive combination generator.
  std::vector<size_t> stack;
  auto rec = [&](auto&& self, size_t start) -> void {
    if (stack.size() == n) {
      consider(stack);
      return;
    }
    for (size_t i = start; i + (n - stack.size()) <= m; ++i) {
      stack.push_back(i);
      self(self, i + 1);
      stack.pop_back();
    }
  };
  if (n == 0) return std::nullopt;
  rec(rec, 0);
  return best;
}

}  // namespace rauzy
