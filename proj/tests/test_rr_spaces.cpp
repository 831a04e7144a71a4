#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hermlab/rr_spaces.hpp"

using namespace hermlab;

namespace {

std::uint64_t pole_order(std::uint32_t q, std::pair<std::uint32_t, std::uint32_t> e) {
  return (std::uint64_t)q * e.first + (std::uint64_t)(q + 1) * e.second;
}

}  // namespace

TEST_CASE("one-point monomial basis: pinned small cases") {
  auto m = monomial_basis(2, 2);
  REQUIRE(m.exps.size() == 2);
  CHECK(m.exps[0] == std::pair<std::uint32_t, std::uint32_t>{0, 0});
  CHECK(m.exps[1] == std::pair<std::uint32_t, std::uint32_t>{1, 0});

  CHECK(monomial_basis(2, -1).exps.empty());
  CHECK(monomial_basis(2, -7).exps.empty());
  REQUIRE(monomial_basis(2, 0).exps.size() == 1);
  // pole order 1 is a Weierstrass gap: s=1 adds nothing
  CHECK(monomial_basis(2, 1).exps.size() == 1);
  // q=2 basis at s=3: {1, x, y}
  auto m3 = monomial_basis(2, 3);
  REQUIRE(m3.exps.size() == 3);
  CHECK(m3.exps[1] == std::pair<std::uint32_t, std::uint32_t>{1, 0});
  CHECK(m3.exps[2] == std::pair<std::uint32_t, std::uint32_t>{0, 1});
}

TEST_CASE("one-point monomial basis: size and order invariants") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
    CAPTURE(q);
    std::int64_t g = (std::int64_t)q * (q - 1) / 2;
    std::int64_t n = (std::int64_t)q * q * q;

    // Riemann-Roch size in the exact range, counted against the capped set
    for (std::int64_t s = 2 * g - 1; s < n; ++s) {
      auto m = monomial_basis(q, s);
      if ((std::int64_t)m.exps.size() != s - g + 1) {
        CAPTURE(s);
        REQUIRE((std::int64_t)m.exps.size() == s - g + 1);
      }
    }

    // strictly increasing pole order, caps respected, duplicate-free
    auto big = monomial_basis(q, n + 2 * g - 1);
    CHECK(big.exps.size() == (std::size_t)n);
    std::set<std::uint64_t> poles;
    for (std::size_t t = 0; t < big.exps.size(); ++t) {
      auto [i, j] = big.exps[t];
      CHECK(i <= q * q - 1);
      CHECK(j <= q - 1);
      CHECK(poles.insert(pole_order(q, big.exps[t])).second);
      if (t > 0) CHECK(pole_order(q, big.exps[t - 1]) < pole_order(q, big.exps[t]));
    }
    // the single largest pole order is the only one missing one step down
    CHECK(monomial_basis(q, n + 2 * g - 2).exps.size() == (std::size_t)n - 1);
  }
}

TEST_CASE("branch expansion at the origin") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    CAPTURE(q);
    auto tw = TowerContext::build(q, q);
    const CubicExt& E = tw->fq6;
    std::uint32_t N = q * (q + 1) + q;
    auto be = branch_expansion(*tw, AffinePointF6{E.zero(), E.zero()}, N);
    // Y(t) = t^{q+1} - t^{q(q+1)} + ... at (0,0)
    for (std::uint32_t k = 1; k <= N; ++k) {
      CAPTURE(k);
      if (k == q + 1)
        CHECK(be.c[k] == E.one());
      else if (k == q * (q + 1))
        CHECK(be.c[k] == E.neg(E.one()));
      else
        CHECK(E.is_zero(be.c[k]));
    }
  }
}

TEST_CASE("branch expansion is Frobenius-equivariant across the orbit") {
  for (std::uint32_t q : {2u, 3u}) {
    CAPTURE(q);
    CurveCtx cv = build_curve(TowerContext::build(q, q));
    const CubicExt& E = cv.tower->fq6;
    Degree3Place pl = find_degree3_place(cv);
    std::uint32_t N = 2 * q + 3;
    auto b0 = branch_expansion(*cv.tower, pl.pts[0], N);
    auto b1 = branch_expansion(*cv.tower, pl.pts[1], N);
    for (std::uint32_t k = 1; k <= N; ++k) CHECK(E.frobenius(b0.c[k]) == b1.c[k]);
  }
}

TEST_CASE("curve polynomial has identically zero series at place points") {
  for (std::uint32_t q : {2u, 3u}) {
    CAPTURE(q);
    CurveCtx cv = build_curve(TowerContext::build(q, q));
    const Field& F = cv.tower->fq2;
    Degree3Place pl = find_degree3_place(cv);
    BivarQ2 curve_poly;
    curve_poly.terms.push_back({0, q, F.one()});
    curve_poly.terms.push_back({0, 1, F.one()});
    curve_poly.terms.push_back({q + 1, 0, F.neg(F.one())});
    bq2_normalize(F, curve_poly);
    std::uint32_t nterms = 3 * q + 2;
    auto be = branch_expansion(*cv.tower, pl.pts[0], nterms);
    auto ser = numerator_series_at(*cv.tower, be, curve_poly, nterms);
    for (const F6& c : ser) CHECK(cv.tower->fq6.is_zero(c));
  }
}

TEST_CASE("degree-3 spanning set: q=2 dimensions and structure") {
  CurveCtx cv = build_curve(TowerContext::build(2, 2));
  Degree3Place pl = find_degree3_place(cv);

  // numerator space dimension = l(sR) + #{cofactors of the curve polynomial}
  std::size_t expect[] = {1, 4, 7, 10};
  for (std::int64_t s = 0; s <= 3; ++s) {
    CAPTURE(s);
    auto sp = deg3_spanning_set(cv, pl, s);
    CHECK(sp.u == (s == 0 ? 0u : 1u));
    CHECK((std::int64_t)sp.u * 3 - sp.v == s);
    CHECK(sp.numerators.size() == expect[s]);
    for (const auto& f : sp.numerators) {
      CHECK(!f.terms.empty());
      CHECK(f.total_degree() <= 3 * sp.u);
    }
  }
}

TEST_CASE("degree-3 spanning set: s = q+1 has the full cubic space") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    CAPTURE(q);
    CurveCtx cv = build_curve(TowerContext::build(q, q));
    Degree3Place pl = find_degree3_place(cv);
    auto sp = deg3_spanning_set(cv, pl, q + 1);
    CHECK(sp.u == 1);
    CHECK(sp.v == 0);
    CHECK(sp.numerators.size() == 10);
  }
}

TEST_CASE("degree-3 numerators re-verify at higher precision") {
  for (std::uint32_t q : {2u, 3u}) {
    CAPTURE(q);
    CurveCtx cv = build_curve(TowerContext::build(q, q));
    const CubicExt& E = cv.tower->fq6;
    Degree3Place pl = find_degree3_place(cv);
    std::int64_t n2g2 = (std::int64_t)q * q * q + (q + 1) * (q - 2);
    std::int64_t alpha = (n2g2 + 2) / 3;
    for (std::int64_t s = 0; s <= alpha; ++s) {
      CAPTURE(s);
      auto sp = deg3_spanning_set(cv, pl, s);
      std::uint32_t prec = sp.v + q;
      for (int pi = 0; pi < 3; ++pi) {
        auto be = branch_expansion(*cv.tower, pl.pts[pi], prec);
        for (const auto& f : sp.numerators) {
          auto ser = numerator_series_at(*cv.tower, be, f, prec);
          for (std::uint32_t k = 0; k < sp.v; ++k) CHECK(E.is_zero(ser[k]));
        }
      }
    }
  }
}
