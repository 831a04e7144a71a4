#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "hermlab/agcodes.hpp"
#include "hermlab/rate_stats.hpp"

using namespace hermlab;

namespace {

RateSeries series_for(std::uint32_t q, std::uint32_t r, Gamma g) {
  CodeFamily fam(q, r, g);
  return RateSeries::from_records(q, r, g, fam.dim_series());
}

void check_sample_identities(const RateSeries& rs) {
  MomentSummary m = moments(rs);
  auto jumps = jump_multiset(rs);
  std::int64_t count = 0, sum = 0, sum2 = 0;
  for (auto [s, mult] : jumps) {
    count += mult;
    sum += s * (std::int64_t)mult;
    sum2 += s * s * (std::int64_t)mult;
  }
  CHECK(count == (std::int64_t)rs.n);
  // the empirical sample realizes the distribution moments exactly
  CHECK(Rational(sum, rs.n) == m.mean);
  CHECK(Rational(sum2, rs.n) == m.second);
  CHECK(empirical_sample(rs, SampleMode::jumps).size() == rs.n);
  CHECK(empirical_sample(rs, SampleMode::jumps_positive).size() == rs.n - rs.dims[0]);
  for (double v : empirical_sample(rs, SampleMode::jumps_positive)) CHECK(v > 0);
}

}  // namespace

TEST_CASE("q=2 moments from the known series") {
  RateSeries one = RateSeries::from_dims(2, 2, Gamma::one_point,
                                         {1, 1, 1, 1, 3, 3, 5, 7, 7, 8});
  MomentSummary m1 = moments(one);
  CHECK(m1.mean == Rational(43, 8));
  CHECK(m1.second == Rational(283, 8));
  CHECK(m1.variance == Rational(415, 64));
  CHECK(m1.mean.render(2) == "5.38");
  CHECK(m1.variance.render(2) == "6.48");
  CHECK(mean_ratio(one, m1).render(3) == "0.672");
  CHECK(fixed3(stddev_ratio(one, m1)) == "0.318");

  RateSeries three = RateSeries::from_dims(2, 2, Gamma::degree_three, {1, 1, 5, 8});
  MomentSummary m3 = moments(three);
  CHECK(m3.mean == Rational(17, 8));
  CHECK(m3.variance == Rational(55, 64));
  CHECK(m3.mean.render(2) == "2.12");
  CHECK(m3.variance.render(2) == "0.86");
  CHECK(mean_ratio(three, m3).render(3) == "0.797");
  CHECK(fixed3(stddev_ratio(three, m3)) == "0.348");

  check_sample_identities(one);
  check_sample_identities(three);
}

TEST_CASE("computed series match the q=2 reference") {
  RateSeries one = series_for(2, 2, Gamma::one_point);
  CHECK(one.dims == std::vector<std::uint32_t>{1, 1, 1, 1, 3, 3, 5, 7, 7, 8});
  RateSeries three = series_for(2, 2, Gamma::degree_three);
  CHECK(three.dims == std::vector<std::uint32_t>{1, 1, 5, 8});
}

TEST_CASE("moment table entries for small q at r=q") {
  struct Row {
    std::uint32_t q;
    const char *e1, *v1, *e3, *v3;           // two-decimal mean and variance
    const char *re1, *rd1, *re3, *rd3;       // three-decimal ratios
  };
  const Row rows[] = {
      {3, "20.15", "53.46", "7.63", "4.09", "0.746", "0.271", "0.848", "0.225"},
      {4, "48.66", "246.79", "17.77", "16.02", "0.760", "0.245", "0.833", "0.188"},
      {5, "95.04", "841.16", "33.37", "60.18", "0.760", "0.232", "0.801", "0.186"},
  };
  for (const Row& row : rows) {
    CAPTURE(row.q);
    RateSeries one = series_for(row.q, row.q, Gamma::one_point);
    MomentSummary m1 = moments(one);
    CHECK(m1.mean.render(2) == row.e1);
    CHECK(m1.variance.render(2) == row.v1);
    CHECK(mean_ratio(one, m1).render(3) == row.re1);
    CHECK(fixed3(stddev_ratio(one, m1)) == row.rd1);

    RateSeries three = series_for(row.q, row.q, Gamma::degree_three);
    MomentSummary m3 = moments(three);
    CHECK(m3.mean.render(2) == row.e3);
    CHECK(m3.variance.render(2) == row.v3);
    CHECK(mean_ratio(three, m3).render(3) == row.re3);
    CHECK(fixed3(stddev_ratio(three, m3)) == row.rd3);

    check_sample_identities(one);
    check_sample_identities(three);
  }
}

TEST_CASE("moment table entries for r=2 subfields") {
  RateSeries one = series_for(4, 2, Gamma::one_point);
  MomentSummary m1 = moments(one);
  CHECK(m1.mean.render(2) == "54.86");
  CHECK(m1.variance.render(2) == "164.96");
  CHECK(mean_ratio(one, m1).render(3) == "0.857");
  CHECK(fixed3(stddev_ratio(one, m1)) == "0.201");

  RateSeries three = series_for(4, 2, Gamma::degree_three);
  MomentSummary m3 = moments(three);
  CHECK(m3.mean.render(2) == "20.38");
  CHECK(m3.variance.render(2) == "10.52");
  CHECK(mean_ratio(three, m3).render(3) == "0.955");
  CHECK(fixed3(stddev_ratio(three, m3)) == "0.152");

  check_sample_identities(one);
  check_sample_identities(three);
}

TEST_CASE("rate function extends as a CDF") {
  RateSeries rs = RateSeries::from_dims(2, 2, Gamma::degree_three, {1, 1, 5, 8});
  CHECK(rs.rate(-5) == Rational(0));
  CHECK(rs.rate(-1) == Rational(0));
  CHECK(rs.rate(0) == Rational(1, 8));
  CHECK(rs.rate(2) == Rational(5, 8));
  CHECK(rs.rate(3) == Rational(1));
  CHECK(rs.rate(100) == Rational(1));
  CHECK(rs.alpha() == 3);

  auto jumps = jump_multiset(rs);
  REQUIRE(jumps.size() == 3);
  CHECK(jumps[0] == std::pair<std::int64_t, std::uint32_t>{0, 1});
  CHECK(jumps[1] == std::pair<std::int64_t, std::uint32_t>{2, 4});
  CHECK(jumps[2] == std::pair<std::int64_t, std::uint32_t>{3, 3});
}

TEST_CASE("series validation rejects malformed input") {
  CHECK_THROWS_AS(RateSeries::from_dims(2, 2, Gamma::degree_three, {1, 1, 5}),
                  std::invalid_argument);  // too short
  CHECK_THROWS_AS(RateSeries::from_dims(2, 2, Gamma::degree_three, {1, 5, 1, 8}),
                  std::invalid_argument);  // not monotone
  CHECK_THROWS_AS(RateSeries::from_dims(2, 2, Gamma::degree_three, {1, 1, 5, 7}),
                  std::invalid_argument);  // does not reach n
  CHECK_THROWS_AS(RateSeries::from_dims(2, 2, Gamma::degree_three, {0, 1, 5, 8}),
                  std::invalid_argument);  // zero at s=0
  CHECK_THROWS_AS(RateSeries::from_dims(2, 2, Gamma::degree_three, {1, 1, 9, 8}),
                  std::invalid_argument);  // exceeds n
  CHECK_THROWS_AS(RateSeries::from_dims(1, 2, Gamma::one_point, {1}),
                  std::invalid_argument);  // q too small
}

TEST_CASE("sample mode tokens") {
  CHECK(sample_mode_token(SampleMode::jumps) == "jumps");
  CHECK(sample_mode_token(SampleMode::jumps_positive) == "jumps_positive");
}
