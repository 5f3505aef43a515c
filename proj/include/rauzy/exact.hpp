#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rauzy {

using Int = mpz_class;
using Rat = mpq_class;
using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// Thrown on bad user input (invalid permutation text, infeasible request, ...).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an internal invariant that should be unreachable fails.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Thrown when a resource cap (vertex budget, search depth, ...) is exceeded.
struct limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or "p". Throws domain_error on malformed input.
Rat parse_rat(const std::string& s);

std::string rat_str(const Rat& q);
std::string int_str(const Int& z);

// Bit size of numerator plus denominator; used for the hybrid-arithmetic
// rounding budget in the Lyapunov estimator.
inline size_t rat_bits(const Rat& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

double rat_to_double(const Rat& q);

// Best rational approximation to q with denominator at most max_den
// (continued-fraction convergent truncation).
Rat round_rat(const Rat& q, const Int& max_den);

// FNV-1a over bytes; used for cache integrity stamps.
uint64_t fnv1a(const std::string& data);

std::vector<long> small_primes_up_to(long bound);

}  // namespace rauzy
