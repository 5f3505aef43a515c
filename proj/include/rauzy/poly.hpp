#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rauzy/exact.hpp"

namespace rauzy {

// Dense univariate polynomial over Z, coefficients by ascending degree.
// Invariant: no trailing zero coefficient; the zero polynomial is empty.
struct ZPoly {
  IVec c;

  ZPoly() = default;
  explicit ZPoly(IVec coeffs) : c(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Int coeff(size_t i) const { return i < c.size() ? c[i] : Int(0); }
  Int lead() const { return c.empty() ? Int(0) : c.back(); }

  bool operator==(const ZPoly& o) const { return c == o.c; }

  static ZPoly x_power(size_t n) {
    IVec v(n + 1, Int(0));
    v[n] = 1;
    return ZPoly(std::move(v));
  }
  static ZPoly constant(const Int& k) { return ZPoly(IVec{k}); }

  std::string str(const std::string& var = "t") const;
};

ZPoly operator+(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a, const ZPoly& b);
ZPoly operator*(const ZPoly& a, const ZPoly& b);
ZPoly operator*(const Int& k, const ZPoly& a);

Rat eval(const ZPoly& p, const Rat& x);
ZPoly derivative(const ZPoly& p);

// Exact division; throws internal_error if b does not divide a over Q
// or the quotient is not integral.
ZPoly exact_div(const ZPoly& a, const ZPoly& b);

// True if b divides a over Q.
bool divides(const ZPoly& b, const ZPoly& a);

Int content(const ZPoly& p);
ZPoly primitive_part(const ZPoly& p);

// Primitive gcd over Z (positive leading coefficient).
ZPoly gcd(ZPoly a, ZPoly b);

bool is_squarefree(const ZPoly& p);

// Reciprocal (palindromic) test: t^deg p(1/t) == p(t).
bool is_reciprocal(const ZPoly& p);

// For reciprocal p of even degree 2g, the trace polynomial q of degree g with
// p(t) = t^g q(t + 1/t). Throws domain_error if p is not reciprocal of even
// degree.
ZPoly trace_polynomial(const ZPoly& p);

// Number of distinct real roots of p in the open interval (a, b); either
// bound may be absent, meaning -inf / +inf. p must be nonzero and the finite
// endpoints must not themselves be roots.
int sturm_count(const ZPoly& p, const std::optional<Rat>& a, const std::optional<Rat>& b);

// n-th cyclotomic polynomial.
ZPoly cyclotomic(unsigned n);

// All n with phi(n) <= bound.
std::vector<unsigned> cyclotomic_indices_up_to_degree(unsigned bound);

// Degrees (with multiplicity) of the irreducible factors of p mod `prime`.
// Returns nullopt if p mod prime is not squarefree or degree drops (bad prime).
std::optional<std::vector<int>> factor_degrees_mod_p(const ZPoly& p, long prime);

ZPoly poly_from_string_coeffs(const std::vector<long>& ascending);

}  // namespace rauzy
