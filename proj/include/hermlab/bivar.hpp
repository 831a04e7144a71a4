#pragma once

// Sparse bivariate polynomials in X, Y with coefficients in the quadratic
// field (packed) or its cubic extension. Terms are kept sorted by
// (total degree, i, j) with no explicit zeros.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hermlab/ff_tower.hpp"

namespace hermlab {

struct TermQ2 {
  std::uint32_t i, j;
  std::uint32_t c;
};

struct TermF6 {
  std::uint32_t i, j;
  F6 c;
};

inline bool term_order_less(std::uint32_t i1, std::uint32_t j1, std::uint32_t i2,
                            std::uint32_t j2) {
  std::uint64_t d1 = (std::uint64_t)i1 + j1, d2 = (std::uint64_t)i2 + j2;
  if (d1 != d2) return d1 < d2;
  if (i1 != i2) return i1 < i2;
  return j1 < j2;
}

struct BivarQ2 {
  std::vector<TermQ2> terms;

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms) d = std::max(d, t.i + t.j);
    return d;
  }
};

struct BivarF6 {
  std::vector<TermF6> terms;
};

namespace bivar_detail {

template <class Term, class IsZero, class Add>
void normalize(std::vector<Term>& ts, IsZero is_zero, Add add) {
  std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
    return term_order_less(a.i, a.j, b.i, b.j);
  });
  std::vector<Term> out;
  for (const auto& t : ts) {
    if (!out.empty() && out.back().i == t.i && out.back().j == t.j)
      out.back().c = add(out.back().c, t.c);
    else
      out.push_back(t);
  }
  std::erase_if(out, [&](const Term& t) { return is_zero(t.c); });
  ts = std::move(out);
}

}  // namespace bivar_detail

inline void bq2_normalize(const Field& F, BivarQ2& f) {
  bivar_detail::normalize(
      f.terms, [](std::uint32_t c) { return c == 0; },
      [&](std::uint32_t a, std::uint32_t b) { return F.add(a, b); });
}

inline void bf6_normalize(const CubicExt& E, BivarF6& f) {
  bivar_detail::normalize(
      f.terms, [&](const F6& c) { return E.is_zero(c); },
      [&](const F6& a, const F6& b) { return E.add(a, b); });
}

inline BivarF6 bf6_mul(const CubicExt& E, const BivarF6& a, const BivarF6& b) {
  BivarF6 out;
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms)
      out.terms.push_back({ta.i + tb.i, ta.j + tb.j, E.mul(ta.c, tb.c)});
  bf6_normalize(E, out);
  return out;
}

inline F6 bf6_eval(const CubicExt& E, const BivarF6& f, const F6& x, const F6& y) {
  F6 acc = E.zero();
  for (const auto& t : f.terms)
    acc = E.add(acc, E.mul(t.c, E.mul(E.pow(x, t.i), E.pow(y, t.j))));
  return acc;
}

inline std::uint32_t bq2_eval(const Field& F, const BivarQ2& f, std::uint32_t x,
                              std::uint32_t y) {
  std::uint32_t acc = 0;
  for (const auto& t : f.terms)
    acc = F.add(acc, F.mul(t.c, F.mul(F.pow(x, t.i), F.pow(y, t.j))));
  return acc;
}

inline F6 bq2_eval_f6(const CubicExt& E, const BivarQ2& f, const F6& x, const F6& y) {
  F6 acc = E.zero();
  for (const auto& t : f.terms)
    acc = E.add(acc, E.mul(E.from_base(t.c), E.mul(E.pow(x, t.i), E.pow(y, t.j))));
  return acc;
}

inline BivarF6 bf6_frobenius(const CubicExt& E, const BivarF6& f) {
  BivarF6 out = f;
  for (auto& t : out.terms) t.c = E.frobenius(t.c);
  return out;
}

// Down-conversion is a rationality assertion: every coefficient must lie in
// the embedded quadratic field.
inline BivarQ2 bf6_down(const CubicExt& E, const BivarF6& f) {
  BivarQ2 out;
  for (const auto& t : f.terms) out.terms.push_back({t.i, t.j, E.to_base(t.c)});
  return out;
}

inline BivarF6 bq2_lift(const CubicExt& E, const BivarQ2& f) {
  BivarF6 out;
  for (const auto& t : f.terms) out.terms.push_back({t.i, t.j, E.from_base(t.c)});
  return out;
}

}  // namespace hermlab
