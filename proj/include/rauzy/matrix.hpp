#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "rauzy/exact.hpp"

namespace rauzy {

template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c, T(0)) {}
  Mat(size_t r, size_t c, std::initializer_list<long> vals) : Mat(r, c) {
    size_t i = 0;
    for (long v : vals) a_[i++] = T(v);
  }

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw internal_error("matrix product shape mismatch");
    Mat p(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const T& x = (*this)(i, k);
        if (x == 0) continue;
        for (size_t j = 0; j < o.cols_; ++j) p(i, j) += x * o(k, j);
      }
    return p;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    if (cols_ != v.size()) throw internal_error("matrix-vector shape mismatch");
    std::vector<T> out(rows_, T(0));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Mat operator+(const Mat& o) const {
    Mat s(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
    return s;
  }
  Mat operator-(const Mat& o) const {
    Mat s(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
    return s;
  }
  Mat operator-() const {
    Mat s(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = -a_[i];
    return s;
  }

  T trace() const {
    T t(0);
    for (size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  // Entrywise absolute sum; monotone and submultiplicative, which is what the
  // cocycle domination checks need from an L1 norm.
  T norm_l1() const {
    T t(0);
    for (const T& x : a_) t += x < 0 ? T(-x) : x;
    return t;
  }

  bool is_zero() const {
    for (const T& x : a_)
      if (x != 0) return false;
    return true;
  }

  Mat pow(unsigned long e) const {
    Mat r = identity(rows_), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  std::vector<T> row(size_t i) const {
    return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  std::string str() const;

 private:
  size_t rows_, cols_;
  std::vector<T> a_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

QMat to_qmat(const IMat& m);
// Requires every entry integral.
IMat to_imat(const QMat& m);

size_t rank(QMat m);
Rat det(QMat m);

// Reduced row echelon form (in place); returns pivot columns.
std::vector<size_t> rref(QMat& m);

// Basis of { v : m v = 0 }, one vector per row of the result.
QMat right_kernel(const QMat& m);

// Solves m x = b; throws domain_error if inconsistent. For underdetermined
// systems returns the solution with free variables set to zero.
QVec solve(const QMat& m, const QVec& b);

QMat inverse(const QMat& m);

// Characteristic polynomial det(tI - m), coefficients by ascending degree,
// leading coefficient 1. Exact (Faddeev-LeVerrier).
IVec charpoly(const IMat& m);

// Row Hermite normal form with transform: U * a = h, U unimodular.
void hnf(const IMat& a, IMat& h, IMat& u);

// Basis (rows) of the left kernel lattice { x in Z^r : x a = 0 }; saturated.
IMat integer_left_kernel(const IMat& a);

// Rows of `m` span a Q-subspace V; returns a lattice basis of V cap Z^n.
IMat saturate_rows(const IMat& m);

Rat dot(const QVec& a, const QVec& b);
Int dot(const IVec& a, const IVec& b);

}  // namespace rauzy
