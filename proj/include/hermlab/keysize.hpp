#pragma once

// McEliece public-key sizes along a dimension series: the exact per-s curve
// from the subfield subcode dimension, and a smooth estimate driven by a
// fitted extreme value model of the rate function.

#include <cstdint>
#include <string>
#include <vector>

#include "hermlab/distfit.hpp"
#include "hermlab/rate_stats.hpp"

namespace hermlab {

// log2(r) * k * (n - k) bits for a standard-form generator or parity-check
// matrix. Throws std::invalid_argument unless k <= n and r >= 2.
double key_bits(std::uint32_t r, std::uint32_t n, std::uint32_t k);

struct KeySizePoint {
  std::int64_t s = 0;
  double rate = 0;            // R(s) = dim/n
  double exact_bits = 0;      // log2(r) n^2 R(1-R), equal to key_bits(r,n,dim)
  double cdf = 0;             // F(s) under the fitted model
  double estimated_bits = 0;  // log2(r) n^2 F(1-F)
};

struct KeySizeProfile {
  std::uint32_t q = 0, r = 0;
  Gamma gamma = Gamma::one_point;
  DistParams model;  // extreme value parameters behind the estimate
  std::vector<KeySizePoint> points;  // one per s = 0..alpha
};

// Exact and estimated key-size curves on the series' s-grid. The model
// defaults to the moment fit of the series' own mean and variance; the
// two-argument form substitutes explicit extreme value parameters (an MLE
// fit, say).
KeySizeProfile keysize_profile(const RateSeries& rs);
KeySizeProfile keysize_profile(const RateSeries& rs, const DistParams& ev);

// argmax of the estimated curve in closed form: F = 1/2 at
// loc + scale * log(log 2)
double estimated_peak_location(const DistParams& ev);

// rows `s,R,exact_bits,F,estimated_bits` under that header
std::string profile_csv(const KeySizeProfile& prof);

}  // namespace hermlab
