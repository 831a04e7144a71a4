#pragma once

// The rate function of a dimension series read as a probability
// distribution: R(s) = subdim(s)/n is a CDF on {0..alpha}, its jumps are the
// point masses, and the first two moments come out as exact rationals.

#include <cstdint>
#include <string>
#include <vector>

#include "hermlab/agcodes.hpp"
#include "hermlab/rational.hpp"

namespace hermlab {

struct RateSeries {
  std::uint32_t q = 0, r = 0;
  Gamma gamma = Gamma::one_point;
  std::uint32_t n = 0, deg_g = 1, genus = 0;
  std::vector<std::uint32_t> dims;  // subfield subcode dimension at s = 0..alpha

  // Validates shape: length alpha+1 for the family, monotone, positive,
  // capped by n, reaching n at the end. Throws std::invalid_argument.
  static RateSeries from_dims(std::uint32_t q, std::uint32_t r, Gamma gamma,
                              std::vector<std::uint32_t> dims);
  static RateSeries from_records(std::uint32_t q, std::uint32_t r, Gamma gamma,
                                 const std::vector<DimRecord>& recs);

  std::int64_t alpha() const { return (std::int64_t)dims.size() - 1; }

  // CDF value at any integer: 0 below the support, 1 above it.
  Rational rate(std::int64_t s) const;
};

struct MomentSummary {
  Rational mean;      // sum over s of 1 - R(s)
  Rational second;    // sum over s of (2s+1)(1 - R(s))
  Rational variance;  // second - mean^2
  double stddev = 0;  // sqrt of the variance
};

MomentSummary moments(const RateSeries& rs);

// Jump positions with multiplicities: value s carries mass
// (dims[s] - dims[s-1])/n; only positive multiplicities are listed.
std::vector<std::pair<std::int64_t, std::uint32_t>> jump_multiset(const RateSeries& rs);

// The n-point empirical sample realizing the distribution exactly.
// jumps_positive drops the zero values (there is always at least one, since
// the code at s = 0 already contains the all-ones word), for fitting
// families supported on the positive axis.
enum class SampleMode { jumps, jumps_positive };
std::string sample_mode_token(SampleMode m);  // "jumps" / "jumps_positive"
std::vector<double> empirical_sample(const RateSeries& rs, SampleMode mode);

// Normalized location and spread: mean*deg/n is exact, stddev*deg/n is not.
Rational mean_ratio(const RateSeries& rs, const MomentSummary& m);
double stddev_ratio(const RateSeries& rs, const MomentSummary& m);

// fixed-point with three decimals, for the ratio plots
std::string fixed3(double x);

}  // namespace hermlab
