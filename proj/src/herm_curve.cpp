#include "hermlab/herm_curve.hpp"

#include <algorithm>
#include <sstream>

#include "hermlab/exact_linalg.hpp"

namespace hermlab {

namespace {

// Truncated polynomial in t over the cubic extension, coefficients [0..deg].
using TPoly = std::vector<F6>;

TPoly tp_mul(const CubicExt& E, const TPoly& a, const TPoly& b) {
  TPoly out(a.size() + b.size() - 1, E.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (E.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = E.add(out[i + j], E.mul(a[i], b[j]));
  }
  return out;
}

TPoly tp_pow(const CubicExt& E, TPoly base, std::uint64_t e) {
  TPoly acc{E.one()};
  while (e) {
    if (e & 1) acc = tp_mul(E, acc, base);
    e >>= 1;
    if (e) base = tp_mul(E, base, base);
  }
  return acc;
}

// Substitutes X = a + t, Y = a^q(a+t) - b^q into Y^q + Y - X^{q+1} and
// checks the exact factorization t^q * (a^{q^2} - a - t). At a rational
// point the cofactor constant term vanishes and the result is a multiple
// of t^{q+1}.
void check_tangent_substitution(const TowerContext& tw, const F6& a, const F6& b) {
  const CubicExt& E = tw.fq6;
  std::uint32_t q = tw.q;
  F6 aq = E.pow(a, q);
  TPoly X{a, E.one()};
  TPoly Y{E.sub(E.mul(aq, a), E.pow(b, q)), aq};
  TPoly lhs = tp_pow(E, Y, q);
  {
    TPoly yterm = Y;
    yterm.resize(std::max(lhs.size(), yterm.size()), E.zero());
    lhs.resize(yterm.size(), E.zero());
    for (std::size_t i = 0; i < yterm.size(); ++i) lhs[i] = E.add(lhs[i], yterm[i]);
  }
  TPoly xq1 = tp_pow(E, X, q + 1);
  lhs.resize(std::max(lhs.size(), xq1.size()), E.zero());
  for (std::size_t i = 0; i < xq1.size(); ++i) lhs[i] = E.sub(lhs[i], xq1[i]);

  TPoly expected(q + 2, E.zero());
  expected[q] = E.sub(E.frobenius(a), a);  // a^{q^2} - a
  expected[q + 1] = E.neg(E.one());
  lhs.resize(q + 2, E.zero());
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (!(lhs[i] == expected[i]))
      throw internal_error("tangent substitution identity failed");
}

bool on_curve_f6(const TowerContext& tw, const F6& x, const F6& y) {
  const CubicExt& E = tw.fq6;
  F6 lhs = E.add(E.pow(y, tw.q), y);
  F6 rhs = E.pow(x, tw.q + 1);
  return lhs == rhs;
}

}  // namespace

CurveCtx build_curve(std::shared_ptr<const TowerContext> tower) {
  CurveCtx c;
  c.tower = std::move(tower);
  const TowerContext& tw = *c.tower;
  c.q = tw.q;
  c.genus = tw.q * (tw.q - 1) / 2;
  c.n = tw.q * tw.q * tw.q;
  const Field& F = tw.fq2;
  c.points.reserve(c.n);
  for (std::uint32_t x = 0; x < F.order(); ++x) {
    std::uint32_t rhs = F.pow(x, tw.q + 1);
    std::uint32_t fiber = 0;
    for (std::uint32_t y = 0; y < F.order(); ++y) {
      if (F.add(F.pow(y, tw.q), y) == rhs) {
        c.points.push_back({x, y});
        ++fiber;
      }
    }
    if (fiber != tw.q) throw internal_error("curve fiber is not of size q");
  }
  if (c.points.size() != c.n) throw internal_error("curve point count is not q^3");
  // ties the genus to the series range q^3 + (q+1)(q-2) = n + 2g - 2
  if (c.n + 2 * c.genus - 2 != c.n + (tw.q + 1) * (tw.q - 2))
    throw internal_error("genus identity violated");
  return c;
}

std::array<F6, 3> tangent_line(const TowerContext& tw, const AffinePointF6& pt) {
  const CubicExt& E = tw.fq6;
  return {E.neg(E.pow(pt.x, tw.q)), E.one(), E.pow(pt.y, tw.q)};
}

Degree3Place find_degree3_place(const CurveCtx& curve, std::uint32_t skip) {
  const TowerContext& tw = *curve.tower;
  const CubicExt& E = tw.fq6;
  const Field& F2 = tw.fq2;
  std::uint32_t q = tw.q;
  std::uint32_t p = tw.p;
  Field Fp(p, 1);

  // b -> b^q + b as an F_p-linear map in the digit basis of the cubic field.
  std::uint32_t dim = 0;
  {
    std::uint64_t o = E.order();
    while (o > 1) o /= p, ++dim;
  }
  auto f6_digits = [&](const F6& v) {
    std::vector<std::uint32_t> d;
    d.reserve(dim);
    for (int c = 0; c < 3; ++c) {
      auto part = F2.digits(v.c[c]);
      d.insert(d.end(), part.begin(), part.end());
    }
    return d;
  };
  auto f6_from_digits = [&](const std::vector<std::uint32_t>& d) {
    std::uint32_t per = dim / 3;
    F6 v;
    for (int c = 0; c < 3; ++c)
      v.c[c] = F2.from_digits(
          std::vector<std::uint32_t>(d.begin() + c * per, d.begin() + (c + 1) * per));
    return v;
  };

  MatrixF T(Fp, dim, dim);
  for (std::uint32_t k = 0; k < dim; ++k) {
    std::vector<std::uint32_t> unit(dim, 0);
    unit[k] = 1;
    F6 e = f6_from_digits(unit);
    auto img = f6_digits(E.add(E.pow(e, q), e));
    for (std::uint32_t i = 0; i < dim; ++i) T.at(i, k) = img[i];  // column k
  }
  MatrixF ker = nullspace(T);

  // Scan x-coordinates outside the quadratic field in serialized order; a
  // fiber is either fully inside the cubic field or disjoint from it.
  for (std::uint64_t av = F2.order(); av < E.order(); ++av) {
    F6 a = E.deserialize(av);
    if (E.in_base(a)) continue;
    auto rhs = f6_digits(E.pow(a, q + 1));
    MatrixF Aug(Fp, dim, dim + 1);
    for (std::uint32_t i = 0; i < dim; ++i) {
      for (std::uint32_t j = 0; j < dim; ++j) Aug.at(i, j) = T.at(i, j);
      Aug.at(i, dim) = rhs[i];
    }
    auto rA = rref(Aug);
    bool ok = true;
    for (auto pc : rA.pivots)
      if (pc == dim) ok = false;
    if (!ok) continue;
    std::vector<std::uint32_t> sol(dim, 0);
    for (std::size_t i = 0; i < rA.rank; ++i) sol[rA.pivots[i]] = rA.m.at(i, dim);

    // the affine solutions are exactly b0 + ker(T); order them by serialized
    // value and let `skip` step through the global (x, then y) enumeration
    F6 b0 = f6_from_digits(sol);
    std::vector<std::uint64_t> fiber{E.serialize(b0)};
    std::vector<std::uint32_t> comb(ker.rows, 0);
    while (true) {
      std::size_t ix = 0;
      while (ix < ker.rows && comb[ix] == p - 1) comb[ix++] = 0;
      if (ix == ker.rows) break;
      ++comb[ix];
      F6 cand = b0;
      for (std::size_t kr = 0; kr < ker.rows; ++kr) {
        if (!comb[kr]) continue;
        std::vector<std::uint32_t> kd(dim);
        for (std::uint32_t j = 0; j < dim; ++j)
          kd[j] = Fp.mul(comb[kr], ker.at(kr, j));
        cand = E.add(cand, f6_from_digits(kd));
      }
      fiber.push_back(E.serialize(cand));
    }
    if (fiber.size() != q) throw internal_error("degree-3 fiber size is not q");
    std::sort(fiber.begin(), fiber.end());
    if (skip >= fiber.size()) {
      skip -= (std::uint32_t)fiber.size();
      continue;
    }
    F6 b = E.deserialize(fiber[skip]);

    Degree3Place place;
    place.pts[0] = {a, b};
    place.pts[1] = {E.frobenius(a), E.frobenius(b)};
    place.pts[2] = {E.frobenius(place.pts[1].x), E.frobenius(place.pts[1].y)};
    for (const auto& pt : place.pts) {
      if (!on_curve_f6(tw, pt.x, pt.y)) throw internal_error("conjugate off curve");
      if (E.in_base(pt.x) && E.in_base(pt.y))
        throw internal_error("degree-3 orbit contains a rational point");
    }
    if (!(E.frobenius(place.pts[2].x) == a && E.frobenius(place.pts[2].y) == b))
      throw internal_error("Frobenius orbit does not close after three steps");

    check_tangent_substitution(tw, a, b);
    check_tangent_substitution(tw, E.from_base(0), E.from_base(0));

    BivarF6 Lf{{ {0, 0, E.one()} }};
    for (int j = 0; j < 3; ++j) {
      place.tangents[j] = tangent_line(tw, place.pts[j]);
      BivarF6 line{{{1, 0, place.tangents[j][0]},
                    {0, 1, place.tangents[j][1]},
                    {0, 0, place.tangents[j][2]}}};
      bf6_normalize(E, line);
      Lf = bf6_mul(E, Lf, line);
    }
    // Frobenius permutes the tangent lines the way it permutes the points
    for (int j = 0; j < 3; ++j)
      for (int cix = 0; cix < 3; ++cix)
        if (!(E.frobenius(place.tangents[j][cix]) == place.tangents[(j + 1) % 3][cix]))
          throw internal_error("Frobenius does not permute tangent lines");

    place.L = bf6_down(E, Lf);  // throws internal_error when not rational
    for (const auto& pt : place.pts)
      if (!E.is_zero(bq2_eval_f6(E, place.L, pt.x, pt.y)))
        throw internal_error("L does not vanish at a conjugate point");
    place.L_at_points.reserve(curve.points.size());
    for (const auto& r : curve.points) {
      std::uint32_t val = bq2_eval(F2, place.L, r.x, r.y);
      if (val == 0) throw internal_error("L vanishes at a rational point");
      place.L_at_points.push_back(val);
    }
    return place;
  }
  throw internal_error("no degree-3 place found");
}

std::string points_csv(const CurveCtx& curve) {
  std::ostringstream os;
  os << "x,y\n";
  for (const auto& p : curve.points) os << p.x << "," << p.y << "\n";
  return os.str();
}

std::string place_csv(const CurveCtx& curve, const Degree3Place& place) {
  const CubicExt& E = curve.tower->fq6;
  std::ostringstream os;
  os << "x,y\n";
  for (const auto& p : place.pts)
    os << E.serialize(p.x) << "," << E.serialize(p.y) << "\n";
  return os.str();
}

}  // namespace hermlab
