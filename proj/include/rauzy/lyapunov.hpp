#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rauzy/cover.hpp"
#include "rauzy/geometry.hpp"
#include "rauzy/induction.hpp"

namespace rauzy {

struct SectionConfig {
  RauzyWord theta;  // neat loop with positive matrix; found automatically if empty
  uint64_t seed = 1;
  size_t burn_in = 64;         // discarded leading returns per chain
  size_t samples = 100000;     // kept returns (total over chains)
  size_t renorm_cadence = 8;   // QR reorthogonalization cadence, in returns
  size_t bit_budget = 256;     // exact-coordinate budget before rounding
  unsigned chains = 1;
  size_t batches = 40;  // batch-means batches (total over chains)
  size_t diagram_budget = 200000;
};

enum class Piece { Plus, Minus, FullRV, AbelianAbsolute };

struct ReturnSample {
  RauzyWord word;  // the excursion since the previous section hit
  double roof;     // log of the width-norm growth
};

struct SpectrumEstimate {
  std::vector<double> exponents;  // descending, normalized by roof time
  std::vector<double> stderrs;    // batch-means standard error per exponent
  std::vector<std::vector<double>> batch_exponents;
  double total_time = 0;
  size_t samples = 0;
  size_t tie_incidents = 0;
  bool low_confidence = false;
  RauzyWord theta;

  // Residuals |lambda_i + lambda_{n+1-i}| of the symplectic pairing and the
  // batch-means standard error of each paired sum.
  std::vector<double> symmetry_residuals() const;
  std::vector<double> symmetry_stderrs() const;
  // Standard error of the gap lambda_i - lambda_{i+1}.
  double gap_stderr(size_t i) const;
};

// Streams `count` section returns (after burn-in) from a random interior
// point; single chain.
void sample_return_words(const GP& pi, const SectionConfig& cfg, size_t count,
                         const std::function<void(const ReturnSample&)>& sink);

// Monte Carlo spectrum of the chosen cocycle piece via QR-accumulated
// section returns. Deterministic for a fixed config.
SpectrumEstimate estimate_spectrum(const GP& pi, Piece piece, const SectionConfig& cfg);

}  // namespace rauzy
