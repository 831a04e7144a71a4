#include "hermlab/keysize.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hermlab {

double key_bits(std::uint32_t r, std::uint32_t n, std::uint32_t k) {
  if (r < 2) throw std::invalid_argument("key_bits: r must be at least 2");
  if (k > n) throw std::invalid_argument("key_bits: k exceeds n");
  return std::log2((double)r) * (double)k * (double)(n - k);
}

KeySizeProfile keysize_profile(const RateSeries& rs) {
  MomentSummary m = moments(rs);
  auto ev = moment_fit(DistFamily::extreme_value, m.mean.to_double(),
                       m.variance.to_double());
  if (!ev) throw std::invalid_argument("keysize_profile: degenerate series has no model");
  return keysize_profile(rs, *ev);
}

KeySizeProfile keysize_profile(const RateSeries& rs, const DistParams& ev) {
  KeySizeProfile prof;
  prof.q = rs.q;
  prof.r = rs.r;
  prof.gamma = rs.gamma;
  prof.model = ev;
  double lr = std::log2((double)rs.r);
  double n = rs.n;
  for (std::size_t s = 0; s < rs.dims.size(); ++s) {
    KeySizePoint pt;
    pt.s = (std::int64_t)s;
    std::uint32_t k = rs.dims[s];
    pt.rate = k / n;
    pt.exact_bits = key_bits(rs.r, rs.n, k);
    pt.cdf = dist_cdf(DistFamily::extreme_value, ev, (double)s);
    pt.estimated_bits = lr * n * n * pt.cdf * (1 - pt.cdf);
    prof.points.push_back(pt);
  }
  return prof;
}

double estimated_peak_location(const DistParams& ev) {
  return ev.p1 + ev.p2 * std::log(std::log(2.0));
}

std::string profile_csv(const KeySizeProfile& prof) {
  std::string out = "s,R,exact_bits,F,estimated_bits\n";
  char buf[160];
  for (const KeySizePoint& pt : prof.points) {
    std::snprintf(buf, sizeof buf, "%lld,%.8f,%.3f,%.8f,%.3f\n",
                  (long long)pt.s, pt.rate, pt.exact_bits, pt.cdf,
                  pt.estimated_bits);
    out += buf;
  }
  return out;
}

}  // namespace hermlab
