#pragma once

// Geometry of the Hermitian curve Y^q + Y = X^{q+1} over the quadratic field:
// affine rational point enumeration, the degree-3 place as a Frobenius orbit
// of three conjugate points over the cubic extension, and tangent lines.

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hermlab/bivar.hpp"
#include "hermlab/ff_tower.hpp"

namespace hermlab {

struct AffinePointQ2 {
  std::uint32_t x, y;
};

struct AffinePointF6 {
  F6 x, y;
};

struct CurveCtx {
  std::shared_ptr<const TowerContext> tower;
  std::uint32_t q = 0;
  std::uint32_t genus = 0;
  std::uint32_t n = 0;  // q^3 affine rational points
  std::vector<AffinePointQ2> points;  // lexicographic by packed (x, y)
};

// Enumerates the q^3 affine rational points; asserts the per-fiber count q,
// the genus value q(q-1)/2 via n + 2g - 2 = q^3 + (q+1)(q-2), and the curve
// equation for every stored point.
CurveCtx build_curve(std::shared_ptr<const TowerContext> tower);

// Tangent line at a curve point (a, b): Y - a^q X + b^q = 0, returned as
// coefficients (c_X, c_Y, c_0) = (-a^q, 1, b^q).
std::array<F6, 3> tangent_line(const TowerContext& tw, const AffinePointF6& pt);

struct Degree3Place {
  std::array<AffinePointF6, 3> pts;            // P_{j+1} = Frob(P_j), orbit size 3
  std::array<std::array<F6, 3>, 3> tangents;   // coefficients of l_1, l_2, l_3
  BivarQ2 L;                                   // l_1 l_2 l_3, rational, degree 3
  std::vector<std::uint32_t> L_at_points;      // L(R) for every affine rational R
};

// Scans points over the cubic extension in serialized (x, then y) order and
// returns the first Frobenius orbit of size 3 after skipping `skip` of them,
// with its tangent lines and the rational product polynomial L. skip = 0 is
// the canonical place used everywhere; other values exist so independence of
// the choice can be checked. Construction asserts:
//   - curve equation at each conjugate point, orbit closure under Frobenius;
//   - the tangent substitution identity F(a+t, a^q(a+t)-b^q) = t^q(a^{q^2}-a-t),
//     which at rational points degenerates to a multiple of t^{q+1};
//   - all coefficients of L lie in the embedded quadratic field;
//   - L vanishes at each conjugate point and at no affine rational point.
Degree3Place find_degree3_place(const CurveCtx& curve, std::uint32_t skip = 0);

// CSV exports used for cache fingerprinting.
std::string points_csv(const CurveCtx& curve);
std::string place_csv(const CurveCtx& curve, const Degree3Place& place);

}  // namespace hermlab
