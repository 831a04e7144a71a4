#include "hermlab/rate_stats.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hermlab {

RateSeries RateSeries::from_dims(std::uint32_t q, std::uint32_t r, Gamma gamma,
                                 std::vector<std::uint32_t> dims) {
  if (q < 2) throw std::invalid_argument("rate series: q must be at least 2");
  RateSeries rs;
  rs.q = q;
  rs.r = r;
  rs.gamma = gamma;
  rs.n = q * q * q;
  rs.genus = q * (q - 1) / 2;
  rs.deg_g = gamma == Gamma::degree_three ? 3 : 1;
  std::int64_t n2g2 = (std::int64_t)rs.n + 2 * rs.genus - 2;
  std::int64_t alpha = gamma == Gamma::degree_three ? (n2g2 + 2) / 3 : n2g2 + 1;
  if ((std::int64_t)dims.size() != alpha + 1)
    throw std::invalid_argument("rate series: wrong length for the family");
  if (dims.front() < 1) throw std::invalid_argument("rate series: zero dimension at s=0");
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] > rs.n) throw std::invalid_argument("rate series: dimension exceeds length");
    if (i && dims[i] < dims[i - 1])
      throw std::invalid_argument("rate series: dimensions not monotone");
  }
  if (dims.back() != rs.n)
    throw std::invalid_argument("rate series: does not reach full dimension");
  rs.dims = std::move(dims);
  return rs;
}

RateSeries RateSeries::from_records(std::uint32_t q, std::uint32_t r, Gamma gamma,
                                    const std::vector<DimRecord>& recs) {
  std::vector<std::uint32_t> dims;
  dims.reserve(recs.size());
  for (const auto& rec : recs) dims.push_back(rec.subdim);
  return from_dims(q, r, gamma, std::move(dims));
}

Rational RateSeries::rate(std::int64_t s) const {
  if (s < 0) return Rational(0);
  if (s >= (std::int64_t)dims.size()) return Rational(1);
  return Rational(dims[s], n);
}

MomentSummary moments(const RateSeries& rs) {
  std::int64_t e_num = 0, e2_num = 0;
  for (std::size_t s = 0; s < rs.dims.size(); ++s) {
    std::int64_t gap = (std::int64_t)rs.n - rs.dims[s];
    e_num += gap;
    e2_num += (2 * (std::int64_t)s + 1) * gap;
  }
  MomentSummary m;
  m.mean = Rational(e_num, rs.n);
  m.second = Rational(e2_num, rs.n);
  m.variance = m.second - m.mean * m.mean;
  m.stddev = std::sqrt(m.variance.to_double());
  return m;
}

std::vector<std::pair<std::int64_t, std::uint32_t>> jump_multiset(const RateSeries& rs) {
  std::vector<std::pair<std::int64_t, std::uint32_t>> out;
  std::uint32_t prev = 0;
  for (std::size_t s = 0; s < rs.dims.size(); ++s) {
    if (rs.dims[s] > prev) out.emplace_back((std::int64_t)s, rs.dims[s] - prev);
    prev = rs.dims[s];
  }
  return out;
}

std::string sample_mode_token(SampleMode m) {
  return m == SampleMode::jumps ? "jumps" : "jumps_positive";
}

std::vector<double> empirical_sample(const RateSeries& rs, SampleMode mode) {
  std::vector<double> out;
  out.reserve(rs.n);
  for (const auto& [s, mult] : jump_multiset(rs)) {
    if (mode == SampleMode::jumps_positive && s == 0) continue;
    for (std::uint32_t i = 0; i < mult; ++i) out.push_back((double)s);
  }
  return out;
}

Rational mean_ratio(const RateSeries& rs, const MomentSummary& m) {
  return m.mean * Rational(rs.deg_g, rs.n);
}

double stddev_ratio(const RateSeries& rs, const MomentSummary& m) {
  return m.stddev * (double)rs.deg_g / (double)rs.n;
}

std::string fixed3(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace hermlab
