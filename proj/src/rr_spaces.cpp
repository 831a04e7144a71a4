#include "hermlab/rr_spaces.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermlab {

namespace {

// Truncated power series in t over the cubic extension: coefficients [0..len).
using TSer = std::vector<F6>;

TSer tser_mul(const CubicExt& E, const TSer& a, const TSer& b, std::size_t len) {
  TSer out(len, E.zero());
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (E.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
      out[i + j] = E.add(out[i + j], E.mul(a[i], b[j]));
  }
  return out;
}

TSer tser_pow(const CubicExt& E, TSer base, std::uint64_t e, std::size_t len) {
  TSer acc(len, E.zero());
  acc[0] = E.one();
  while (e) {
    if (e & 1) acc = tser_mul(E, acc, base, len);
    e >>= 1;
    if (e) base = tser_mul(E, base, base, len);
  }
  return acc;
}

// Series of Y(t) = b + sum c_k t^k truncated to len coefficients.
TSer y_series(const CubicExt& E, const BranchExpansion& be, std::size_t len) {
  if (len > (std::size_t)be.N + 1)
    throw internal_error("branch expansion precision too small for request");
  TSer y(len, E.zero());
  if (len > 0) y[0] = be.pt.y;
  for (std::size_t k = 1; k < len; ++k) y[k] = be.c[k];
  return y;
}

}  // namespace

MonomialBasis1Pt monomial_basis(std::uint32_t q, std::int64_t s) {
  MonomialBasis1Pt out;
  out.s = s;
  if (s < 0) return out;
  for (std::uint32_t i = 0; i < q * q; ++i)
    for (std::uint32_t j = 0; j < q; ++j)
      if ((std::int64_t)q * i + (std::int64_t)(q + 1) * j <= s)
        out.exps.emplace_back(i, j);
  // pole orders qi+(q+1)j are pairwise distinct on this index range, so this
  // sort is a strict total order
  std::sort(out.exps.begin(), out.exps.end(),
            [q](const auto& a, const auto& b) {
              return (std::uint64_t)q * a.first + (std::uint64_t)(q + 1) * a.second <
                     (std::uint64_t)q * b.first + (std::uint64_t)(q + 1) * b.second;
            });
  return out;
}

BranchExpansion branch_expansion(const TowerContext& tw, const AffinePointF6& pt,
                                 std::uint32_t N) {
  const CubicExt& E = tw.fq6;
  const std::uint32_t q = tw.q;
  BranchExpansion be;
  be.pt = pt;
  be.N = N;
  be.c.assign((std::size_t)N + 1, E.zero());

  // Substituting X = a + t, Y = b + u into the curve equation leaves
  // u^q + u = a^q t + a t^q + t^{q+1}; solve for u coefficient by coefficient.
  F6 aq = E.pow(pt.x, q);
  for (std::uint32_t k = 1; k <= N; ++k) {
    F6 v = E.zero();
    if (k == 1) v = E.add(v, aq);
    if (k == q) v = E.add(v, pt.x);
    if (k == q + 1) v = E.add(v, E.one());
    if (k % q == 0) v = E.sub(v, E.pow(be.c[k / q], q));
    be.c[k] = v;
  }

  // Independent re-check: the series must satisfy the curve equation mod
  // t^{N+1} when raised to the q-th power directly.
  std::size_t len = (std::size_t)N + 1;
  TSer y = y_series(E, be, len);
  TSer lhs = tser_pow(E, y, q, len);
  for (std::size_t k = 0; k < len; ++k) lhs[k] = E.add(lhs[k], y[k]);
  TSer x{pt.x, E.one()};
  TSer xq1 = tser_pow(E, x, q + 1, len);
  for (std::size_t k = 0; k < len; ++k)
    if (!(lhs[k] == xq1[k]))
      throw internal_error("branch expansion fails the curve equation");
  return be;
}

std::vector<F6> numerator_series_at(const TowerContext& tw, const BranchExpansion& be,
                                    const BivarQ2& f, std::uint32_t nterms) {
  const CubicExt& E = tw.fq6;
  std::vector<F6> out(nterms, E.zero());
  if (nterms == 0) return out;

  std::uint32_t max_i = 0, max_j = 0;
  for (const auto& t : f.terms) {
    max_i = std::max(max_i, t.i);
    max_j = std::max(max_j, t.j);
  }
  std::vector<TSer> px(max_i + 1), py(max_j + 1);
  px[0].assign(nterms, E.zero());
  px[0][0] = E.one();
  TSer xser{be.pt.x, E.one()};
  for (std::uint32_t i = 1; i <= max_i; ++i) px[i] = tser_mul(E, px[i - 1], xser, nterms);
  py[0] = px[0];
  TSer yser = y_series(E, be, nterms);
  for (std::uint32_t j = 1; j <= max_j; ++j) py[j] = tser_mul(E, py[j - 1], yser, nterms);

  for (const auto& t : f.terms) {
    TSer prod = tser_mul(E, px[t.i], py[t.j], nterms);
    F6 cf = E.from_base(t.c);
    for (std::uint32_t k = 0; k < nterms; ++k)
      out[k] = E.add(out[k], E.mul(cf, prod[k]));
  }
  return out;
}

MatrixF deg3_condition_matrix(const CurveCtx& curve, const Degree3Place& place,
                              const std::vector<std::pair<std::uint32_t, std::uint32_t>>& monos,
                              std::uint32_t v) {
  const TowerContext& tw = *curve.tower;
  const CubicExt& E = tw.fq6;
  MatrixF A(tw.fq2, 9ull * v, monos.size());
  if (v == 0 || monos.empty()) return A;

  std::uint32_t max_i = 0, max_j = 0;
  for (const auto& [i, j] : monos) {
    max_i = std::max(max_i, i);
    max_j = std::max(max_j, j);
  }

  for (std::size_t pidx = 0; pidx < 3; ++pidx) {
    BranchExpansion be = branch_expansion(tw, place.pts[pidx], v);
    std::vector<TSer> px(max_i + 1), py(max_j + 1);
    px[0].assign(v, E.zero());
    px[0][0] = E.one();
    TSer xser{be.pt.x, E.one()};
    for (std::uint32_t i = 1; i <= max_i; ++i) px[i] = tser_mul(E, px[i - 1], xser, v);
    py[0] = px[0];
    TSer yser = y_series(E, be, v);
    for (std::uint32_t j = 1; j <= max_j; ++j) py[j] = tser_mul(E, py[j - 1], yser, v);

    for (std::size_t col = 0; col < monos.size(); ++col) {
      TSer prod = tser_mul(E, px[monos[col].first], py[monos[col].second], v);
      for (std::uint32_t l = 0; l < v; ++l)
        for (std::uint32_t cc = 0; cc < 3; ++cc)
          A.at((pidx * v + l) * 3 + cc, col) = prod[l].c[cc];
    }
  }
  return A;
}

Deg3SpanningSet deg3_spanning_set(const CurveCtx& curve, const Degree3Place& place,
                                  std::int64_t s) {
  if (s < 0) throw std::invalid_argument("negative multiple of the degree-3 place");
  const std::uint32_t q = curve.q;
  Deg3SpanningSet out;
  out.s = s;
  out.u = (std::uint32_t)((s + q) / (q + 1));
  out.v = (std::uint32_t)((std::int64_t)out.u * (q + 1) - s);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> monos;
  for (std::uint32_t d = 0; d <= 3 * out.u; ++d)
    for (std::uint32_t i = 0; i <= d; ++i) monos.emplace_back(i, d - i);

  MatrixF A = deg3_condition_matrix(curve, place, monos, out.v);
  MatrixF ns = nullspace(A);
  for (std::size_t rr = 0; rr < ns.rows; ++rr) {
    BivarQ2 f;
    for (std::size_t col = 0; col < monos.size(); ++col)
      if (ns.at(rr, col))
        f.terms.push_back({monos[col].first, monos[col].second, ns.at(rr, col)});
    bq2_normalize(curve.tower->fq2, f);
    out.numerators.push_back(std::move(f));
  }
  return out;
}

}  // namespace hermlab
