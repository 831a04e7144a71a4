#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hermlab/agcodes.hpp"
#include "hermlab/keysize.hpp"
#include "hermlab/rational.hpp"

using namespace hermlab;

namespace {

RateSeries series_for(int q, int r, Gamma g) {
  CodeFamily fam(q, r, g);
  return RateSeries::from_records(q, r, g, fam.dim_series());
}

}  // namespace

TEST_CASE("key bits formula") {
  CHECK(key_bits(2, 8, 4) == doctest::Approx(16.0).epsilon(1e-15));
  CHECK(key_bits(2, 8, 0) == 0.0);
  CHECK(key_bits(2, 8, 8) == 0.0);
  CHECK(key_bits(3, 27, 9) ==
        doctest::Approx(std::log2(3.0) * 9 * 18).epsilon(1e-15));
  CHECK(key_bits(3, 27, 9) == doctest::Approx(256.8).epsilon(1e-3));
  CHECK_THROWS_AS(key_bits(2, 8, 9), std::invalid_argument);
  CHECK_THROWS_AS(key_bits(1, 8, 4), std::invalid_argument);
}

TEST_CASE("k(n-k) equals n^2 R(1-R) exactly") {
  for (Gamma g : {Gamma::one_point, Gamma::degree_three}) {
    RateSeries rs = series_for(3, 3, g);
    std::int64_t n = rs.n;
    for (std::size_t s = 0; s < rs.dims.size(); ++s) {
      std::int64_t k = rs.dims[s];
      Rational lhs(k * (n - k), 1);
      Rational rhs = Rational(n * n, 1) * Rational(k, n) * Rational(n - k, n);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("profile endpoints and plateau") {
  RateSeries rs = series_for(2, 2, Gamma::one_point);
  KeySizeProfile prof = keysize_profile(rs);
  REQUIRE(prof.points.size() == rs.dims.size());
  CHECK(prof.q == 2);
  CHECK(prof.r == 2);

  // dim 1 in the plateau: log2(r) * (n-1) bits
  for (std::size_t s = 0; s < 4; ++s) {
    if (rs.dims[s] != 1) continue;
    CHECK(prof.points[s].exact_bits == doctest::Approx(7.0).epsilon(1e-15));
  }
  // full code at the end of the grid: zero key bits
  CHECK(prof.points.back().rate == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(prof.points.back().exact_bits == 0.0);

  for (std::size_t s = 0; s < prof.points.size(); ++s) {
    CHECK(prof.points[s].s == (std::int64_t)s);
    CHECK(prof.points[s].exact_bits >= 0);
    CHECK(prof.points[s].estimated_bits >= 0);
    CHECK(prof.points[s].exact_bits ==
          doctest::Approx(key_bits(rs.r, rs.n, rs.dims[s])).epsilon(1e-15));
  }
}

TEST_CASE("default model is the series moment fit") {
  RateSeries rs = series_for(2, 2, Gamma::degree_three);
  MomentSummary m = moments(rs);
  auto ev = moment_fit(DistFamily::extreme_value, m.mean.to_double(),
                       m.variance.to_double());
  REQUIRE(ev.has_value());
  KeySizeProfile prof = keysize_profile(rs);
  CHECK(prof.model.p1 == ev->p1);
  CHECK(prof.model.p2 == ev->p2);

  KeySizeProfile forced = keysize_profile(rs, DistParams{5.0, 2.0});
  CHECK(forced.model.p1 == 5.0);
  CHECK(forced.model.p2 == 2.0);
  CHECK(forced.points.size() == prof.points.size());
}

TEST_CASE("estimated curve peaks where the cdf crosses one half") {
  DistParams ev{10.0, 3.0};
  double peak = estimated_peak_location(ev);
  CHECK(peak == doctest::Approx(10.0 + 3.0 * std::log(std::log(2.0))).epsilon(1e-15));
  CHECK(dist_cdf(DistFamily::extreme_value, ev, peak) ==
        doctest::Approx(0.5).epsilon(1e-12));
  // F(1-F) falls off on both sides
  auto est = [&](double x) {
    double f = dist_cdf(DistFamily::extreme_value, ev, x);
    return f * (1 - f);
  };
  CHECK(est(peak) > est(peak - 1));
  CHECK(est(peak) > est(peak + 1));
}

TEST_CASE("estimated and exact maxima land close together") {
  // advisory proximity check, reported but not fatal
  for (Gamma g : {Gamma::one_point, Gamma::degree_three}) {
    RateSeries rs = series_for(4, 4, g);
    KeySizeProfile prof = keysize_profile(rs);
    std::size_t exact_arg = 0, est_arg = 0;
    for (std::size_t s = 0; s < prof.points.size(); ++s) {
      if (prof.points[s].exact_bits > prof.points[exact_arg].exact_bits) exact_arg = s;
      if (prof.points[s].estimated_bits > prof.points[est_arg].estimated_bits) est_arg = s;
    }
    WARN(std::llabs((long long)exact_arg - (long long)est_arg) <= 2);
  }
}

TEST_CASE("profile csv round-trips the grid") {
  RateSeries rs = series_for(2, 2, Gamma::one_point);
  std::string csv = profile_csv(keysize_profile(rs));
  CHECK(csv.rfind("s,R,exact_bits,F,estimated_bits\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == rs.dims.size() + 1);
  // s=0 row: R = 1/8, one dimension worth of key bits
  CHECK(csv.find("\n0,0.12500000,7.000,") != std::string::npos);
}
