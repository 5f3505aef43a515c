#include "rauzy/matrix.hpp"

#include <sstream>

namespace rauzy {

template <class T>
std::string Mat<T>::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows_; ++i) {
    os << (i ? "\n" : "");
    for (size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << (*this)(i, j);
    }
  }
  return os.str();
}

template class Mat<Int>;
template class Mat<Rat>;

QMat to_qmat(const IMat& m) {
  QMat q(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
  return q;
}

IMat to_imat(const QMat& m) {
  IMat z(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw internal_error("to_imat: non-integral entry");
      z(i, j) = m(i, j).get_num();
    }
  return z;
}

std::vector<size_t> rref(QMat& m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rat inv = m(r, c);
    for (size_t j = 0; j < m.cols(); ++j) m(r, j) /= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t rank(QMat m) {
  return rref(m).size();
}

Rat det(QMat m) {
  if (m.rows() != m.cols()) throw internal_error("det: not square");
  Rat d(1);
  size_t n = m.rows();
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    Rat inv = m(c, c);
    for (size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) / inv;
      for (size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

QMat right_kernel(const QMat& m) {
  QMat e = m;
  std::vector<size_t> pivots = rref(e);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<size_t> free_cols;
  for (size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  QMat k(free_cols.size(), m.cols());
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    size_t fc = free_cols[fi];
    k(fi, fc) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) k(fi, pivots[r]) = -e(r, fc);
  }
  return k;
}

QVec solve(const QMat& m, const QVec& b) {
  QMat aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::vector<size_t> pivots = rref(aug);
  for (size_t c : pivots)
    if (c == m.cols()) throw domain_error("solve: inconsistent system");
  QVec x(m.cols(), Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

QMat inverse(const QMat& m) {
  size_t n = m.rows();
  QMat aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<size_t> pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw domain_error("inverse: singular matrix");
  QMat inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

IVec charpoly(const IMat& m) {
  if (m.rows() != m.cols()) throw internal_error("charpoly: not square");
  size_t n = m.rows();
  QMat a = to_qmat(m);
  QMat mk = QMat::identity(n);
  QVec c(n + 1, Rat(0));
  c[n] = 1;
  for (size_t k = 1; k <= n; ++k) {
    QMat am = a * mk;
    Rat ck = -am.trace() / Rat(static_cast<long>(k));
    c[n - k] = ck;
    mk = am;
    for (size_t i = 0; i < n; ++i) mk(i, i) += ck;
  }
  IVec out(n + 1);
  for (size_t i = 0; i <= n; ++i) {
    if (c[i].get_den() != 1) throw internal_error("charpoly: non-integral coefficient");
    out[i] = c[i].get_num();
  }
  return out;
}

void hnf(const IMat& a, IMat& h, IMat& u) {
  size_t r = a.rows(), c = a.cols();
  h = a;
  u = IMat::identity(r);
  size_t row = 0;
  for (size_t col = 0; col < c && row < r; ++col) {
    // Clear below `row` in `col` with gcd row operations.
    size_t piv = row;
    bool any = false;
    for (size_t i = row; i < r; ++i)
      if (h(i, col) != 0) {
        piv = i;
        any = true;
        break;
      }
    if (!any) continue;
    auto swap_rows = [&](IMat& m, size_t x, size_t y) {
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(x, j), m(y, j));
    };
    if (piv != row) {
      swap_rows(h, piv, row);
      swap_rows(u, piv, row);
    }
    for (size_t i = row + 1; i < r; ++i) {
      while (h(i, col) != 0) {
        Int q = h(row, col) / h(i, col);  // truncated division is fine here
        for (size_t j = 0; j < c; ++j) h(row, j) -= q * h(i, j);
        for (size_t j = 0; j < r; ++j) u(row, j) -= q * u(i, j);
        swap_rows(h, row, i);
        swap_rows(u, row, i);
      }
    }
    if (h(row, col) < 0) {
      for (size_t j = 0; j < c; ++j) h(row, j) = -h(row, j);
      for (size_t j = 0; j < r; ++j) u(row, j) = -u(row, j);
    }
    ++row;
  }
  // Reduce entries above pivots.
  size_t pr = 0;
  for (size_t col = 0; col < c && pr < row; ++col) {
    if (h(pr, col) == 0) continue;
    for (size_t i = 0; i < pr; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(pr, col).get_mpz_t());
      if (q != 0) {
        for (size_t j = 0; j < c; ++j) h(i, j) -= q * h(pr, j);
        for (size_t j = 0; j < r; ++j) u(i, j) -= q * u(pr, j);
      }
    }
    ++pr;
  }
}

IMat integer_left_kernel(const IMat& a) {
  IMat h, u;
  hnf(a, h, u);
  std::vector<size_t> zero_rows;
  for (size_t i = 0; i < h.rows(); ++i) {
    bool z = true;
    for (size_t j = 0; j < h.cols(); ++j)
      if (h(i, j) != 0) {
        z = false;
        break;
      }
    if (z) zero_rows.push_back(i);
  }
  IMat k(zero_rows.size(), a.rows());
  for (size_t i = 0; i < zero_rows.size(); ++i)
    for (size_t j = 0; j < a.rows(); ++j) k(i, j) = u(zero_rows[i], j);
  return k;
}

IMat saturate_rows(const IMat& m) {
  // V = rowspace(m) over Q. Its saturation is the integer kernel of any
  // integer matrix whose kernel is V; take k with rows spanning V-perp.
  QMat kq = right_kernel(to_qmat(m));
  IMat k(kq.rows(), kq.cols());
  for (size_t i = 0; i < kq.rows(); ++i) {
    Int lcm(1);
    for (size_t j = 0; j < kq.cols(); ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), kq(i, j).get_den_mpz_t());
    for (size_t j = 0; j < kq.cols(); ++j) {
      Rat v = kq(i, j) * Rat(lcm);
      k(i, j) = v.get_num();
    }
  }
  // rows x with x * k^T = 0  <=>  k x = 0.
  return integer_left_kernel(k.transpose());
}

Rat dot(const QVec& a, const QVec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int dot(const IVec& a, const IVec& b) {
  Int s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace rauzy
