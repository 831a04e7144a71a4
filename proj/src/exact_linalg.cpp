#include "hermlab/exact_linalg.hpp"

#include <algorithm>

namespace hermlab {
namespace {

void check_field(const MatrixF& m) {
  if (!m.field) throw std::invalid_argument("matrix has no field");
}

// Eliminate column `col` from every row except `prow` using the pivot row,
// which is already normalized and has zeros left of `col`.
void eliminate_column(MatrixF& m, std::size_t prow, std::size_t col) {
  const Field& F = *m.field;
  const std::uint32_t* pr = m.row(prow);
  const std::size_t cols = m.cols;
  const bool binary = F.characteristic() == 2;
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (r == prow) continue;
    std::uint32_t f = m.at(r, col);
    if (!f) continue;
    std::uint32_t* rr = m.row(r);
    // subtracting f*pivot_row == adding (-f)*pivot_row
    if (const std::uint32_t* mr = F.mul_row_ptr(F.neg(f))) {
      if (binary) {
        for (std::size_t j = col; j < cols; ++j) rr[j] ^= mr[pr[j]];
      } else {
        const std::uint32_t* at = F.add_table();
        const std::size_t n = F.order();
        for (std::size_t j = col; j < cols; ++j)
          rr[j] = at[(std::size_t)rr[j] * n + mr[pr[j]]];
      }
    } else {
      for (std::size_t j = col; j < cols; ++j)
        rr[j] = F.sub(rr[j], F.mul(f, pr[j]));
    }
  }
}

}  // namespace

namespace detail {

RrefResult rref_generic(const MatrixF& m) {
  check_field(m);
  RrefResult out;
  out.m = m;
  MatrixF& R = out.m;
  const Field& F = *m.field;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < R.cols && lead < R.rows; ++col) {
    std::size_t piv = lead;
    while (piv < R.rows && R.at(piv, col) == 0) ++piv;
    if (piv == R.rows) continue;
    if (piv != lead)
      std::swap_ranges(R.row(piv), R.row(piv) + R.cols, R.row(lead));
    std::uint32_t inv = F.inv(R.at(lead, col));
    if (inv != F.one()) {
      std::uint32_t* pr = R.row(lead);
      if (const std::uint32_t* mr = F.mul_row_ptr(inv)) {
        for (std::size_t j = col; j < R.cols; ++j) pr[j] = mr[pr[j]];
      } else {
        for (std::size_t j = col; j < R.cols; ++j) pr[j] = F.mul(inv, pr[j]);
      }
    }
    eliminate_column(R, lead, col);
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = out.pivots.size();
  return out;
}

}  // namespace detail

F2RrefResult rref_f2(const F2Matrix& m) {
  F2RrefResult out;
  out.m = m;
  F2Matrix& R = out.m;
  const std::size_t words = R.words;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < R.cols && lead < R.rows; ++col) {
    std::size_t piv = lead;
    while (piv < R.rows && !R.get(piv, col)) ++piv;
    if (piv == R.rows) continue;
    if (piv != lead)
      std::swap_ranges(R.row(piv), R.row(piv) + words, R.row(lead));
    const std::uint64_t* pr = R.row(lead);
    const std::size_t w0 = col / 64;
    for (std::size_t r = 0; r < R.rows; ++r) {
      if (r == lead || !R.get(r, col)) continue;
      std::uint64_t* rr = R.row(r);
      for (std::size_t w = w0; w < words; ++w) rr[w] ^= pr[w];
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = out.pivots.size();
  return out;
}

std::size_t rank_of_f2(const F2Matrix& m) {
  // forward elimination only
  F2Matrix R = m;
  const std::size_t words = R.words;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < R.cols && lead < R.rows; ++col) {
    std::size_t piv = lead;
    while (piv < R.rows && !R.get(piv, col)) ++piv;
    if (piv == R.rows) continue;
    if (piv != lead)
      std::swap_ranges(R.row(piv), R.row(piv) + words, R.row(lead));
    const std::uint64_t* pr = R.row(lead);
    const std::size_t w0 = col / 64;
    for (std::size_t r = lead + 1; r < R.rows; ++r) {
      if (!R.get(r, col)) continue;
      std::uint64_t* rr = R.row(r);
      for (std::size_t w = w0; w < words; ++w) rr[w] ^= pr[w];
    }
    ++lead;
  }
  return lead;
}

F2Matrix to_f2(const MatrixF& m) {
  check_field(m);
  if (m.field->order() != 2) throw std::invalid_argument("matrix is not over GF(2)");
  F2Matrix out(m.rows, m.cols);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      if (m.at(r, c)) out.set(r, c, true);
  return out;
}

MatrixF from_f2(const F2Matrix& m, const Field& f2) {
  if (f2.order() != 2) throw std::invalid_argument("target field is not GF(2)");
  MatrixF out(f2, m.rows, m.cols);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      out.at(r, c) = m.get(r, c) ? 1 : 0;
  return out;
}

RrefResult rref(const MatrixF& m) {
  check_field(m);
  if (m.field->order() == 2 && m.rows && m.cols) {
    F2RrefResult fast = rref_f2(to_f2(m));
    RrefResult out;
    out.m = from_f2(fast.m, *m.field);
    out.rank = fast.rank;
    out.pivots = std::move(fast.pivots);
    return out;
  }
  return detail::rref_generic(m);
}

std::size_t rank_of(const MatrixF& m) {
  check_field(m);
  if (m.field->order() == 2) return rank_of_f2(to_f2(m));
  // forward elimination only; cheaper than a full Jordan pass
  MatrixF R = m;
  const Field& F = *R.field;
  const bool binary = F.characteristic() == 2;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < R.cols && lead < R.rows; ++col) {
    std::size_t piv = lead;
    while (piv < R.rows && R.at(piv, col) == 0) ++piv;
    if (piv == R.rows) continue;
    if (piv != lead)
      std::swap_ranges(R.row(piv), R.row(piv) + R.cols, R.row(lead));
    std::uint32_t inv = F.inv(R.at(lead, col));
    std::uint32_t* pr = R.row(lead);
    if (inv != F.one())
      for (std::size_t j = col; j < R.cols; ++j) pr[j] = F.mul(inv, pr[j]);
    for (std::size_t r = lead + 1; r < R.rows; ++r) {
      std::uint32_t f = R.at(r, col);
      if (!f) continue;
      std::uint32_t* rr = R.row(r);
      if (const std::uint32_t* mr = F.mul_row_ptr(F.neg(f))) {
        if (binary) {
          for (std::size_t j = col; j < R.cols; ++j) rr[j] ^= mr[pr[j]];
        } else {
          const std::uint32_t* at = F.add_table();
          const std::size_t n = F.order();
          for (std::size_t j = col; j < R.cols; ++j)
            rr[j] = at[(std::size_t)rr[j] * n + mr[pr[j]]];
        }
      } else {
        for (std::size_t j = col; j < R.cols; ++j)
          rr[j] = F.sub(rr[j], F.mul(f, pr[j]));
      }
    }
    ++lead;
  }
  return lead;
}

MatrixF nullspace(const MatrixF& m) {
  check_field(m);
  return kernel_from_rref(rref(m), m.cols);
}

MatrixF kernel_from_rref(const RrefResult& r, std::size_t cols) {
  check_field(r.m);
  const Field& F = *r.m.field;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : r.pivots) is_pivot[c] = true;
  MatrixF out(F, cols - r.rank, cols);
  std::size_t k = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::uint32_t* v = out.row(k);
    v[free] = F.one();
    for (std::size_t i = 0; i < r.rank; ++i)
      v[r.pivots[i]] = F.neg(r.m.at(i, free));
    ++k;
  }
  return out;
}

F2Matrix nullspace_f2(const F2Matrix& m) {
  F2RrefResult r = rref_f2(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : r.pivots) is_pivot[c] = true;
  F2Matrix out(m.cols - r.rank, m.cols);
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    out.set(k, free, true);
    for (std::size_t i = 0; i < r.rank; ++i)
      if (r.m.get(i, free)) out.set(k, r.pivots[i], true);
    ++k;
  }
  return out;
}

bool row_space_equal(const MatrixF& a, const MatrixF& b) {
  check_field(a);
  check_field(b);
  if (!(*a.field == *b.field)) throw std::invalid_argument("row spaces over different fields");
  if (a.cols != b.cols) throw std::invalid_argument("row spaces of different lengths");
  RrefResult ra = rref(a), rb = rref(b);
  if (ra.rank != rb.rank) return false;
  for (std::size_t i = 0; i < ra.rank; ++i)
    if (!std::equal(ra.m.row(i), ra.m.row(i) + a.cols, rb.m.row(i))) return false;
  return true;
}

MatrixF matmul(const MatrixF& a, const MatrixF& b) {
  check_field(a);
  check_field(b);
  if (!(*a.field == *b.field)) throw std::invalid_argument("matmul over different fields");
  if (a.cols != b.rows) throw std::invalid_argument("matmul shape mismatch");
  const Field& F = *a.field;
  MatrixF out(F, a.rows, b.cols);
  const bool binary = F.characteristic() == 2;
  const std::uint32_t* at = F.add_table();
  const std::size_t n = F.order();
  for (std::size_t i = 0; i < a.rows; ++i) {
    std::uint32_t* orow = out.row(i);
    for (std::size_t k = 0; k < a.cols; ++k) {
      std::uint32_t f = a.at(i, k);
      if (!f) continue;
      const std::uint32_t* brow = b.row(k);
      if (const std::uint32_t* mr = F.mul_row_ptr(f)) {
        if (binary) {
          for (std::size_t j = 0; j < b.cols; ++j) orow[j] ^= mr[brow[j]];
        } else {
          for (std::size_t j = 0; j < b.cols; ++j)
            orow[j] = at[(std::size_t)orow[j] * n + mr[brow[j]]];
        }
      } else {
        for (std::size_t j = 0; j < b.cols; ++j)
          orow[j] = F.add(orow[j], F.mul(f, brow[j]));
      }
    }
  }
  return out;
}

}  // namespace hermlab
