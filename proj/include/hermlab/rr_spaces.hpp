#pragma once

// Riemann-Roch space machinery: the capped monomial basis for one-point
// divisors, branch expansions of Y as a power series in t = X - a at curve
// points, and the numerator spanning set for multiples of a degree-3 place.

#include <cstdint>
#include <utility>
#include <vector>

#include "hermlab/bivar.hpp"
#include "hermlab/exact_linalg.hpp"
#include "hermlab/herm_curve.hpp"

namespace hermlab {

struct MonomialBasis1Pt {
  std::int64_t s = 0;
  // exponent pairs (i, j), 0 <= i <= q^2-1, 0 <= j <= q-1, qi+(q+1)j <= s,
  // sorted by pole order qi+(q+1)j (a total order: pole orders are distinct)
  std::vector<std::pair<std::uint32_t, std::uint32_t>> exps;
};

MonomialBasis1Pt monomial_basis(std::uint32_t q, std::int64_t s);

struct BranchExpansion {
  AffinePointF6 pt;
  std::uint32_t N = 0;
  std::vector<F6> c;  // c[k] for k = 1..N; c[0] is zero padding
};

// Solves Y(t)^q + Y(t) = (a+t)^{q+1} for Y(t) = b + sum c_k t^k to precision
// N; the defining identity is asserted mod t^{N+1} before returning.
BranchExpansion branch_expansion(const TowerContext& tw, const AffinePointF6& pt,
                                 std::uint32_t N);

// First nterms coefficients of f(a + t, Y(t)) at the expansion's point.
std::vector<F6> numerator_series_at(const TowerContext& tw, const BranchExpansion& be,
                                    const BivarQ2& f, std::uint32_t nterms);

// Linear conditions "first v series coefficients of f(a+t, Y(t)) vanish at
// each conjugate point" over the given monomial support, expanded to the
// quadratic field: 9v rows (3 points x v coefficients x 3 coordinates),
// one column per monomial.
MatrixF deg3_condition_matrix(const CurveCtx& curve, const Degree3Place& place,
                              const std::vector<std::pair<std::uint32_t, std::uint32_t>>& monos,
                              std::uint32_t v);

struct Deg3SpanningSet {
  std::int64_t s = 0;
  std::uint32_t u = 0, v = 0;
  std::vector<BivarQ2> numerators;  // basis of the condition nullspace
};

// Numerators f of total degree <= 3u with v_{P_i}(f) >= v at the three
// conjugate points, where s = u(q+1) - v, 0 <= v <= q. The returned set
// spans L(sP) after division by L^u; it may be redundant as functions.
Deg3SpanningSet deg3_spanning_set(const CurveCtx& curve, const Degree3Place& place,
                                  std::int64_t s);

}  // namespace hermlab
