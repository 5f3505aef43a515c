#pragma once

#include <string>
#include <vector>

#include "rauzy/induction.hpp"
#include "rauzy/matrix.hpp"
#include "rauzy/perm.hpp"
#include "rauzy/poly.hpp"

namespace rauzy {

// Symplectic transvection T(c): v -> v + omega(v, c) c, with omega(v, c)
// computed as v^T Omega c.
IMat transvection(const IVec& c, const IMat& omega);
IMat twist_d(const IVec& c, const IMat& omega);   // T(c) - Id
IMat twist_e2(const IVec& c, const IMat& omega);  // T(c)^2 - Id

// Rank of the family inside the d^2-dimensional matrix space, over Q.
size_t rank_bound(const std::vector<IMat>& family);

// Candidate Lie-algebra dimensions for a strongly irreducible piece of
// degree 2g: sp(2g), su(g/2,g/2), the two spin families, so*(g/2,g/2).
struct CandidateDims {
  struct Entry {
    std::string name;
    bool applicable;
    long dim;       // meaningful when applicable
    double approx;  // formula value even when not applicable
  };
  std::vector<Entry> entries;
};
CandidateDims candidate_dims(long g);

// Transvection families realizing the dimension counts for minimal strata
// (genus g >= 3) and hyperelliptic components Q(2r, 2s) (r, s odd).
IMat minimal_strata_omega(long g);
std::vector<IMat> minimal_strata_family(long g);
std::vector<IVec> minimal_strata_twist_cycles(long g);  // the set B
IMat hyperelliptic_omega(long r, long s);
std::vector<IMat> hyperelliptic_family(long r, long s);

// ---- strong irreducibility ------------------------------------------------

struct IrreducibilityWitness {
  bool ok = false;
  std::string failure;  // names the violated condition when !ok
  std::vector<size_t> spanning_subset;              // rows forming a basis
  std::vector<std::pair<size_t, size_t>> tree;      // spanning tree, omega != 0 edges
  bool twist_set_covers = false;                    // recorded assertion
};

IrreducibilityWitness check_strong_irreducibility(const std::vector<IVec>& cycles,
                                                  const IMat& omega,
                                                  const std::vector<IVec>& twist_set);

// ---- Galois pinching --------------------------------------------------------

enum class CheckStatus { Pass, Fail, Inconclusive };

struct PinchingEvidence {
  CheckStatus status = CheckStatus::Inconclusive;
  std::string detail;
  ZPoly charpoly;
  ZPoly trace_poly;
  bool reciprocal = false;
  bool real_distinct_moduli = false;
  bool galois_max = false;
  long prime_budget = 0;
  // stored (prime, factor degree pattern) evidence for P and its trace
  // polynomial; sound re-verification works from these alone
  std::vector<std::pair<long, std::vector<int>>> p_patterns;
  std::vector<std::pair<long, std::vector<int>>> q_patterns;
};

// Criterion part (1): all eigenvalues real with distinct moduli and the
// Galois group of the characteristic polynomial is the full hyperoctahedral
// group. Real-rootedness via Sturm on the trace polynomial; maximality as a
// Frobenius-pattern lower bound (certifies the symmetric image and the full
// sign kernel). Supported sound for g <= 5; otherwise inconclusive.
PinchingEvidence is_galois_pinching(const IMat& a, long prime_budget = 10000);

// Re-runs the group-theoretic certification from stored evidence.
bool verify_pinching_evidence(const PinchingEvidence& e);

struct OrderEvidence {
  bool infinite = false;
  std::string detail;
};
OrderEvidence has_infinite_order(const IMat& b);

// ---- assembled certificate -------------------------------------------------

struct DensityCertificate {
  CheckStatus status = CheckStatus::Inconclusive;
  PinchingEvidence pinching;
  OrderEvidence order;
  bool non_commuting = false;
  bool forms_preserved = false;
  IrreducibilityWitness irreducibility;
  std::string detail;
};

DensityCertificate prasad_rapinchuk(const IMat& a, const IMat& b, const IMat& omega,
                                    const IrreducibilityWitness& witness,
                                    long prime_budget = 10000);

// ---- built-in sporadic components -------------------------------------------

// The four low-genus quadratic components certified directly: permutation,
// the two closed walks, the printed intersection matrix with its chain set,
// and the pinned characteristic polynomial of the composite cocycle matrix.
struct SporadicComponent {
  std::string name;
  GP pi;
  RauzyWord delta1, delta2;
  IMat omega;
  std::vector<IVec> chain_cycles;
  std::vector<IVec> twist_set;
  ZPoly expected_charpoly;
  long genus;
};

const std::vector<SporadicComponent>& sporadic_components();

}  // namespace rauzy
