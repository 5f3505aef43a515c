#include "rauzy/exact.hpp"

#include <algorithm>

namespace rauzy {

Rat parse_rat(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw domain_error("empty rational literal");
  try {
    Rat q(t);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw domain_error("malformed rational literal: " + s);
  }
}

std::string rat_str(const Rat& q) {
  return q.get_str();
}

std::string int_str(const Int& z) {
  return z.get_str();
}

double rat_to_double(const Rat& q) {
  return q.get_d();
}

Rat round_rat(const Rat& q, const Int& max_den) {
  if (q.get_den() <= max_den) return q;
  // Continued-fraction expansion of q, truncated at the last convergent
  // whose denominator fits.
  Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Int num = q.get_num(), den = q.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  while (den != 0) {
    Int a = num / den;
    Int r = num - a * den;
    Int p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    num = den;
    den = r;
  }
  Rat out(neg ? Int(-p1) : p1, q1);
  out.canonicalize();
  return out;
}

uint64_t fnv1a(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<long> small_primes_up_to(long bound) {
  std::vector<bool> sieve(std::max<long>(bound + 1, 2), true);
  std::vector<long> out;
  for (long p = 2; p <= bound; ++p) {
    if (!sieve[p]) continue;
    out.push_back(p);
    for (long k = p * p; k <= bound; k += p) sieve[k] = false;
  }
  return out;
}

}  // namespace rauzy
