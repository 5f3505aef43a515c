#include "rauzy/poly.hpp"

#include <algorithm>
#include <sstream>

namespace rauzy {

std::string ZPoly::str(const std::string& var) const {
  if (zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& a = c[i];
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    if (first && a < 0) os << "-";
    Int mag = abs(a);
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  IVec c(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return ZPoly(std::move(c));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
  IVec c(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return ZPoly(std::move(c));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.zero() || b.zero()) return ZPoly();
  IVec c(a.c.size() + b.c.size() - 1, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
  return ZPoly(std::move(c));
}

ZPoly operator*(const Int& k, const ZPoly& a) {
  IVec c = a.c;
  for (Int& x : c) x *= k;
  return ZPoly(std::move(c));
}

Rat eval(const ZPoly& p, const Rat& x) {
  Rat v(0);
  for (int i = p.degree(); i >= 0; --i) v = v * x + Rat(p.c[i]);
  return v;
}

ZPoly derivative(const ZPoly& p) {
  if (p.degree() <= 0) return ZPoly();
  IVec c(p.c.size() - 1);
  for (size_t i = 1; i < p.c.size(); ++i) c[i - 1] = Int(static_cast<long>(i)) * p.c[i];
  return ZPoly(std::move(c));
}

namespace {

// Division over Q represented with rational coefficient vectors.
using QPoly = std::vector<Rat>;

QPoly to_q(const ZPoly& p) {
  QPoly q(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) q[i] = Rat(p.c[i]);
  return q;
}

void q_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// a = q*b + r
void q_divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    q_trim(a);
    if (a.size() >= b.size() && !a.empty() && a.back() == 0) q_trim(a);
    if (a.empty()) break;
    if (a.size() < b.size()) break;
  }
  r = a;
  q_trim(q);
}

}  // namespace

bool divides(const ZPoly& b, const ZPoly& a) {
  if (b.zero()) return a.zero();
  if (a.zero()) return true;
  QPoly q, r;
  q_divmod(to_q(a), to_q(b), q, r);
  return r.empty();
}

ZPoly exact_div(const ZPoly& a, const ZPoly& b) {
  if (b.zero()) throw internal_error("exact_div by zero polynomial");
  QPoly q, r;
  q_divmod(to_q(a), to_q(b), q, r);
  if (!r.empty()) throw internal_error("exact_div: remainder nonzero");
  IVec c(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i].get_den() != 1) throw internal_error("exact_div: non-integral quotient");
    c[i] = q[i].get_num();
  }
  return ZPoly(std::move(c));
}

Int content(const ZPoly& p) {
  Int g(0);
  for (const Int& x : p.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.zero()) return p;
  Int g = content(p);
  IVec c = p.c;
  for (Int& x : c) x /= g;
  ZPoly out(std::move(c));
  if (out.lead() < 0) out = Int(-1) * out;
  return out;
}

ZPoly gcd(ZPoly a, ZPoly b) {
  QPoly pa = to_q(a), pb = to_q(b);
  while (!pb.empty()) {
    QPoly q, r;
    q_divmod(pa, pb, q, r);
    pa = pb;
    pb = r;
  }
  if (pa.empty()) return ZPoly();
  Int lcm(1);
  for (const Rat& x : pa) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  IVec c(pa.size());
  for (size_t i = 0; i < pa.size(); ++i) {
    Rat v = pa[i] * Rat(lcm);
    c[i] = v.get_num();
  }
  return primitive_part(ZPoly(std::move(c)));
}

bool is_squarefree(const ZPoly& p) {
  return gcd(p, derivative(p)).degree() == 0;
}

bool is_reciprocal(const ZPoly& p) {
  int d = p.degree();
  if (d < 0) return false;
  for (int i = 0; i <= d; ++i)
    if (p.coeff(i) != p.coeff(d - i)) return false;
  return true;
}

ZPoly trace_polynomial(const ZPoly& p) {
  int d = p.degree();
  if (d < 0 || d % 2 != 0 || !is_reciprocal(p))
    throw domain_error("trace_polynomial: input must be reciprocal of even degree");
  int g = d / 2;
  // c_k(s) with c_k(t + 1/t) = t^k + t^-k: c_0 = 2, c_1 = s,
  // c_{k+1} = s c_k - c_{k-1}.
  std::vector<ZPoly> ck(g + 1);
  ck[0] = ZPoly::constant(2);
  if (g >= 1) ck[1] = ZPoly::x_power(1);
  for (int k = 2; k <= g; ++k) ck[k] = ZPoly::x_power(1) * ck[k - 1] - ck[k - 2];
  ZPoly q = ZPoly::constant(p.coeff(g));
  for (int k = 1; k <= g; ++k) q = q + p.coeff(g - k) * ck[k];
  return q;
}

namespace {

int sign_at(const ZPoly& p, const std::optional<Rat>& x, int at_infinity) {
  if (!x) {
    // at_infinity: -1 for -inf, +1 for +inf
    Int l = p.lead();
    if (l == 0) return 0;
    int s = l > 0 ? 1 : -1;
    if (at_infinity < 0 && p.degree() % 2 == 1) s = -s;
    return s;
  }
  Rat v = eval(p, *x);
  return v == 0 ? 0 : (v > 0 ? 1 : -1);
}

int sign_changes(const std::vector<ZPoly>& seq, const std::optional<Rat>& x, int at_inf) {
  int changes = 0, prev = 0;
  for (const ZPoly& p : seq) {
    int s = sign_at(p, x, at_inf);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

int sturm_count(const ZPoly& p, const std::optional<Rat>& a, const std::optional<Rat>& b) {
  if (p.zero()) throw domain_error("sturm_count: zero polynomial");
  ZPoly f = primitive_part(exact_div(p, gcd(p, derivative(p))));  // squarefree part
  std::vector<ZPoly> seq{f, derivative(f)};
  while (!seq.back().zero() && seq.back().degree() > 0) {
    // Negative pseudo-remainder keeps everything over Z.
    QPoly q, r;
    q_divmod(to_q(seq[seq.size() - 2]), to_q(seq.back()), q, r);
    if (r.empty()) break;
    Int lcm(1);
    for (const Rat& x : r) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    IVec c(r.size());
    for (size_t i = 0; i < r.size(); ++i) c[i] = Rat(-r[i] * Rat(lcm)).get_num();
    ZPoly rem(std::move(c));
    // Scale down to the primitive part; sign of leading coeff must be kept.
    Int g = content(rem);
    if (g != 0)
      for (Int& x : rem.c) x /= g;
    seq.push_back(rem);
  }
  if (a && eval(f, *a) == 0) throw domain_error("sturm_count: endpoint is a root");
  if (b && eval(f, *b) == 0) throw domain_error("sturm_count: endpoint is a root");
  return sign_changes(seq, a, -1) - sign_changes(seq, b, +1);
}

ZPoly cyclotomic(unsigned n) {
  static std::vector<ZPoly> cache{ZPoly()};  // cache[0] unused
  if (n < cache.size() && !cache[n].zero()) return cache[n];
  // x^n - 1 = prod_{d|n} Phi_d
  ZPoly num = ZPoly::x_power(n) - ZPoly::constant(1);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = exact_div(num, cyclotomic(d));
  }
  if (n >= cache.size()) cache.resize(n + 1);
  cache[n] = num;
  return num;
}

std::vector<unsigned> cyclotomic_indices_up_to_degree(unsigned bound) {
  std::vector<unsigned> out;
  // phi(n) >= sqrt(n/2), so n <= 2*(bound+1)^2 is a safe cutoff.
  unsigned limit = 2 * (bound + 1) * (bound + 1);
  for (unsigned n = 1; n <= limit; ++n) {
    unsigned phi = n, m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        phi -= phi / p;
        while (m % p == 0) m /= p;
      }
    }
    if (m > 1) phi -= phi / m;
    if (phi <= bound) out.push_back(n);
  }
  return out;
}

namespace {

using U = unsigned long long;

U powmod_u(U b, U e, U p) {
  U r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = (__uint128_t)r * b % p;
    b = (__uint128_t)b * b % p;
    e >>= 1;
  }
  return r;
}

using PPoly = std::vector<U>;  // mod-p poly, ascending

void p_trim(PPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly p_mulmod(const PPoly& a, const PPoly& b, const PPoly& f, U p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + (__uint128_t)a[i] * b[j]) % p;
  }
  // reduce mod f (f monic)
  for (size_t i = c.size(); i-- > f.size() - 1;) {
    U t = c[i];
    if (!t) continue;
    c[i] = 0;
    size_t shift = i - (f.size() - 1);
    for (size_t j = 0; j + 1 < f.size(); ++j)
      c[shift + j] = (c[shift + j] + (__uint128_t)t * (p - f[j] % p) % p) % p;
  }
  c.resize(f.size() - 1);
  p_trim(c);
  return c;
}

PPoly p_gcd(PPoly a, PPoly b, U p) {
  while (!b.empty()) {
    // a mod b
    U inv = powmod_u(b.back(), p - 2, p);
    while (a.size() >= b.size() && !a.empty()) {
      U f = (__uint128_t)a.back() * inv % p;
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        a[shift + i] = (a[shift + i] + (__uint128_t)f * (p - b[i]) % p) % p;
      p_trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    U inv = powmod_u(a.back(), p - 2, p);
    for (U& x : a) x = (__uint128_t)x * inv % p;
  }
  return a;
}

PPoly p_xpow_pk(const PPoly& f, U p) {
  // x^p mod f by square-and-multiply on exponent p.
  PPoly x = {0, 1};
  if (f.size() <= 2) {  // deg f <= 1
    PPoly r = x;
    // reduce directly
    return p_mulmod({1}, r, f, p);
  }
  PPoly result = {1};
  PPoly base = x;
  U e = p;
  while (e) {
    if (e & 1) result = p_mulmod(result, base, f, p);
    base = p_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

PPoly p_compose_power(const PPoly& h, const PPoly& prev, const PPoly& f, U p) {
  // evaluate prev(h) mod f  (used to iterate x -> x^p)
  PPoly acc = {};
  for (size_t i = prev.size(); i-- > 0;) {
    acc = p_mulmod(acc, h, f, p);
    if (prev[i]) {
      if (acc.empty()) acc = {prev[i]};
      else {
        acc[0] = (acc[0] + prev[i]) % p;
      }
    }
  }
  p_trim(acc);
  return acc;
}

}  // namespace

std::optional<std::vector<int>> factor_degrees_mod_p(const ZPoly& poly, long prime) {
  U p = static_cast<U>(prime);
  PPoly f(poly.c.size());
  for (size_t i = 0; i < poly.c.size(); ++i) {
    Int r;
    mpz_mod_ui(r.get_mpz_t(), poly.c[i].get_mpz_t(), p);
    f[i] = r.get_ui();
  }
  p_trim(f);
  if (f.size() != poly.c.size()) return std::nullopt;  // degree dropped
  // make monic
  U inv = powmod_u(f.back(), p - 2, p);
  for (U& x : f) x = (__uint128_t)x * inv % p;
  // squarefree check: gcd(f, f') == 1
  PPoly df(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) df[i - 1] = (__uint128_t)f[i] * (i % p) % p;
  p_trim(df);
  if (df.empty()) return std::nullopt;
  PPoly g = p_gcd(f, df, p);
  if (g.size() != 1) return std::nullopt;

  // Distinct-degree factorization on the (squarefree) f.
  std::vector<int> degrees;
  PPoly fi = f;
  PPoly xp = p_xpow_pk(f, p);  // x^p mod f
  PPoly xpi = xp;              // x^(p^i) mod f
  int n = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= n && fi.size() > 1; ++d) {
    if (d > 1) xpi = p_compose_power(xp, xpi, f, p);
    // gcd(fi, x^(p^d) - x)
    PPoly t = xpi;
    if (t.size() < 2) t.resize(2, 0);
    t[1] = (t[1] + p - 1) % p;
    p_trim(t);
    PPoly gd = p_gcd(fi, t, p);
    if (gd.size() > 1) {
      int total = static_cast<int>(gd.size()) - 1;
      for (int k = 0; k < total / d; ++k) degrees.push_back(d);
      // fi /= gd
      PPoly q;
      {
        PPoly a = fi;
        U invl = powmod_u(gd.back(), p - 2, p);
        q.assign(a.size() - gd.size() + 1, 0);
        while (a.size() >= gd.size() && !a.empty()) {
          U fac = (__uint128_t)a.back() * invl % p;
          size_t shift = a.size() - gd.size();
          q[shift] = fac;
          for (size_t i = 0; i < gd.size(); ++i)
            a[shift + i] = (a[shift + i] + (__uint128_t)fac * (p - gd[i]) % p) % p;
          p_trim(a);
        }
      }
      fi = q;
      p_trim(fi);
    }
  }
  if (fi.size() > 1) degrees.push_back(static_cast<int>(fi.size()) - 1);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

ZPoly poly_from_string_coeffs(const std::vector<long>& ascending) {
  IVec c(ascending.size());
  for (size_t i = 0; i < ascending.size(); ++i) c[i] = Int(ascending[i]);
  return ZPoly(std::move(c));
}

}  // namespace rauzy
