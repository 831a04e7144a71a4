#include "hermlab/agcodes.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace hermlab {

std::string gamma_token(Gamma g) {
  return g == Gamma::one_point ? "1pt" : "deg3";
}

std::optional<Gamma> gamma_from_token(std::string_view tok) {
  if (tok == "1pt") return Gamma::one_point;
  if (tok == "deg3") return Gamma::degree_three;
  return std::nullopt;
}

MatrixF trace_code(const TowerContext& tw, const MatrixF& gens) {
  const Field& F = tw.fq2;
  MatrixF out(tw.fr, gens.rows * tw.h, gens.cols);
  for (std::size_t i = 0; i < gens.rows; ++i)
    for (std::uint32_t c = 0; c < tw.h; ++c) {
      std::uint32_t beta = tw.basis[c];
      std::uint32_t* dst = out.row(i * tw.h + c);
      const std::uint32_t* src = gens.row(i);
      for (std::size_t j = 0; j < gens.cols; ++j) dst[j] = tw.trace(F.mul(beta, src[j]));
    }
  return out;
}

MatrixF coordinate_expansion(const TowerContext& tw, const MatrixF& m) {
  MatrixF out(tw.fr, m.rows * tw.h, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    const std::uint32_t* src = m.row(i);
    for (std::uint32_t c = 0; c < tw.h; ++c) {
      std::uint32_t* dst = out.row(i * tw.h + c);
      for (std::size_t j = 0; j < m.cols; ++j) dst[j] = tw.coord(src[j], c);
    }
  }
  return out;
}

std::uint32_t subcode_dim_from_parity(const TowerContext& tw, const MatrixF& parity,
                                      std::uint32_t n) {
  if (parity.cols != n) throw std::invalid_argument("parity length mismatch");
  if (parity.rows == 0) return n;
  MatrixF x = coordinate_expansion(tw, parity);
  return n - (std::uint32_t)rank_of(x);
}

namespace {

// Fans fn(0..count-1) over `jobs` threads; the first exception wins and is
// rethrown on the caller thread.
void parallel_for(std::int64_t count, unsigned jobs,
                  const std::function<void(std::int64_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::mutex emu;
  std::exception_ptr err;
  unsigned nt = (unsigned)std::min<std::int64_t>(jobs, count);
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (unsigned t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (;;) {
        std::int64_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> l(emu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

// Incremental Gauss-Jordan over a flat field: rows stay fully reduced, so a
// kernel vector for any free column is available at every moment.
class OnlineElim {
 public:
  OnlineElim(const Field& f, std::size_t cols) : f_(&f), cols_(cols) {}

  std::size_t rank() const { return rows_.size(); }

  // Reduces `row` against the pivot rows in place and returns its leading
  // column, or cols when it is dependent.
  std::size_t reduce(std::vector<std::uint32_t>& row) const {
    const Field& F = *f_;
    for (std::size_t t = 0; t < rows_.size(); ++t) {
      std::uint32_t c = row[piv_[t]];
      if (!c) continue;
      const std::uint32_t* pr = rows_[t].data();
      for (std::size_t j = 0; j < cols_; ++j)
        if (pr[j]) row[j] = F.sub(row[j], F.mul(c, pr[j]));
    }
    for (std::size_t j = 0; j < cols_; ++j)
      if (row[j]) return j;
    return cols_;
  }

  bool insert(std::vector<std::uint32_t> row) {
    std::size_t lead = reduce(row);
    if (lead == cols_) return false;
    insert_reduced(std::move(row), lead);
    return true;
  }

  // `row` must already be reduced with leading column `lead`.
  void insert_reduced(std::vector<std::uint32_t> row, std::size_t lead) {
    const Field& F = *f_;
    std::uint32_t s = F.inv(row[lead]);
    if (s != F.one())
      for (auto& v : row)
        if (v) v = F.mul(s, v);
    for (auto& r : rows_) {
      std::uint32_t c = r[lead];
      if (!c) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        if (row[j]) r[j] = F.sub(r[j], F.mul(c, row[j]));
    }
    rows_.push_back(std::move(row));
    piv_.push_back(lead);
  }

  // Kernel vector with a one at `freecol`; valid while `freecol` is free.
  std::vector<std::uint32_t> kernel_vector(std::size_t freecol) const {
    std::vector<std::uint32_t> v(cols_, 0);
    v[freecol] = f_->one();
    for (std::size_t t = 0; t < rows_.size(); ++t)
      v[piv_[t]] = f_->neg(rows_[t][freecol]);
    return v;
  }

  std::vector<std::size_t> free_columns() const {
    std::vector<bool> is_piv(cols_, false);
    for (auto c : piv_) is_piv[c] = true;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!is_piv[j]) out.push_back(j);
    return out;
  }

 private:
  const Field* f_;
  std::size_t cols_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> piv_;
};

// Same incremental elimination, bit-packed over GF(2).
class OnlineElimF2 {
 public:
  explicit OnlineElimF2(std::size_t cols) : cols_(cols), words_((cols + 63) / 64) {}

  std::size_t rank() const { return rows_.size(); }

  void insert(std::vector<std::uint64_t> row) {
    for (std::size_t t = 0; t < rows_.size(); ++t) {
      std::size_t p = piv_[t];
      if ((row[p / 64] >> (p % 64)) & 1) {
        const std::uint64_t* pr = rows_[t].data();
        for (std::size_t w = 0; w < words_; ++w) row[w] ^= pr[w];
      }
    }
    std::size_t lead = cols_;
    for (std::size_t w = 0; w < words_; ++w)
      if (row[w]) {
        lead = w * 64 + std::countr_zero(row[w]);
        break;
      }
    if (lead == cols_) return;
    for (std::size_t t = 0; t < rows_.size(); ++t) {
      std::uint64_t* pr = rows_[t].data();
      if ((pr[lead / 64] >> (lead % 64)) & 1)
        for (std::size_t w = 0; w < words_; ++w) pr[w] ^= row[w];
    }
    rows_.push_back(std::move(row));
    piv_.push_back(lead);
  }

 private:
  std::size_t cols_, words_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> piv_;
};

// Accumulates the F_r rank of the coordinate expansions of quadratic-field
// rows, with the packed path when r = 2.
class SubfieldRankAcc {
 public:
  SubfieldRankAcc(const TowerContext& tw, std::size_t n) : tw_(&tw), n_(n) {
    if (tw.fr.order() == 2)
      f2_.emplace(n);
    else
      gen_.emplace(tw.fr, n);
  }

  void add(const std::uint32_t* row) {
    const TowerContext& tw = *tw_;
    for (std::uint32_t c = 0; c < tw.h; ++c) {
      if (f2_) {
        std::vector<std::uint64_t> packed((n_ + 63) / 64, 0);
        for (std::size_t j = 0; j < n_; ++j)
          if (tw.coord(row[j], c)) packed[j / 64] |= 1ull << (j % 64);
        f2_->insert(std::move(packed));
      } else {
        std::vector<std::uint32_t> x(n_);
        for (std::size_t j = 0; j < n_; ++j) x[j] = tw.coord(row[j], c);
        gen_->insert(std::move(x));
      }
    }
  }

  std::size_t rank() const { return f2_ ? f2_->rank() : gen_->rank(); }

 private:
  const TowerContext* tw_;
  std::size_t n_;
  std::optional<OnlineElim> gen_;
  std::optional<OnlineElimF2> f2_;
};

// The dual filtrations below rest on one analytic fact: every function with
// poles only at infinity of order at most n+2g-2 sums to zero over the
// affine rational points. Checked here on value rows of a spanning family.
void verify_zero_sums(const Field& F, const std::vector<std::vector<std::uint32_t>>& rows,
                      const std::vector<std::uint64_t>& poles, std::uint64_t bound) {
  for (std::size_t t = 0; t < rows.size(); ++t) {
    if (poles[t] > bound) continue;
    std::uint32_t acc = 0;
    for (std::uint32_t v : rows[t]) acc = F.add(acc, v);
    if (acc != 0) throw internal_error("zero-sum identity failed; duality unusable");
  }
}

}  // namespace

MatrixF deg3_eval_matrix(const CurveCtx& curve, const Degree3Place& place,
                         std::int64_t s) {
  const TowerContext& tw = *curve.tower;
  const Field& F = tw.fq2;
  const CubicExt& E = tw.fq6;
  auto sp = deg3_spanning_set(curve, place, s);
  const std::uint32_t n = curve.n;

  std::uint32_t max_i = 0, max_j = 0;
  for (const auto& f : sp.numerators)
    for (const auto& t : f.terms) {
      max_i = std::max(max_i, t.i);
      max_j = std::max(max_j, t.j);
    }
  // per-point monomial powers in the cubic extension
  std::vector<std::vector<F6>> xp(n), yp(n);
  for (std::size_t j = 0; j < n; ++j) {
    F6 x = E.from_base(curve.points[j].x), y = E.from_base(curve.points[j].y);
    xp[j].assign(max_i + 1, E.one());
    for (std::uint32_t i = 1; i <= max_i; ++i) xp[j][i] = E.mul(xp[j][i - 1], x);
    yp[j].assign(max_j + 1, E.one());
    for (std::uint32_t i = 1; i <= max_j; ++i) yp[j][i] = E.mul(yp[j][i - 1], y);
  }

  MatrixF m(F, sp.numerators.size(), n);
  for (std::size_t row = 0; row < sp.numerators.size(); ++row) {
    for (std::size_t j = 0; j < n; ++j) {
      F6 acc = E.zero();
      for (const auto& t : sp.numerators[row].terms)
        acc = E.add(acc, E.mul(E.from_base(t.c), E.mul(xp[j][t.i], yp[j][t.j])));
      // numerators are rational, so the cubic-extension value must be too
      std::uint32_t num = E.to_base(acc);
      std::uint32_t den = F.pow(place.L_at_points[j], sp.u);
      m.at(row, j) = F.mul(num, F.inv(den));
    }
  }
  return m;
}

CodeFamily::CodeFamily(std::uint32_t q, std::uint32_t r, Gamma gamma)
    : tower_(TowerContext::build(q, r)),
      curve_(build_curve(tower_)),
      gamma_(gamma) {
  std::int64_t n2g2 = (std::int64_t)curve_.n + 2 * curve_.genus - 2;
  if (gamma_ == Gamma::degree_three) {
    place_ = find_degree3_place(curve_);
    alpha_ = (n2g2 + 2) / 3;
  } else {
    alpha_ = n2g2 + 1;
  }
}

MatrixF CodeFamily::eval_matrix(std::int64_t s) const {
  const Field& F = tower_->fq2;
  if (gamma_ == Gamma::degree_three) return deg3_eval_matrix(curve_, *place_, s);

  auto mb = monomial_basis(curve_.q, s);
  MatrixF m(F, mb.exps.size(), curve_.n);
  std::uint32_t max_i = 0, max_j = 0;
  for (auto [i, j] : mb.exps) {
    max_i = std::max(max_i, i);
    max_j = std::max(max_j, j);
  }
  for (std::size_t pt = 0; pt < curve_.n; ++pt) {
    std::vector<std::uint32_t> xp(max_i + 1, F.one()), yp(max_j + 1, F.one());
    for (std::uint32_t i = 1; i <= max_i; ++i) xp[i] = F.mul(xp[i - 1], curve_.points[pt].x);
    for (std::uint32_t i = 1; i <= max_j; ++i) yp[i] = F.mul(yp[i - 1], curve_.points[pt].y);
    for (std::size_t row = 0; row < mb.exps.size(); ++row)
      m.at(row, pt) = F.mul(xp[mb.exps[row].first], yp[mb.exps[row].second]);
  }
  return m;
}

std::uint32_t CodeFamily::code_dim(std::int64_t s) const {
  return (std::uint32_t)rank_of(eval_matrix(s));
}

std::uint32_t CodeFamily::subfield_subcode_dim(std::int64_t s) const {
  MatrixF g = eval_matrix(s);
  MatrixF h = nullspace(g);
  return subcode_dim_from_parity(*tower_, h, curve_.n);
}

bool CodeFamily::verify_delsarte(std::int64_t s) const {
  const TowerContext& tw = *tower_;
  MatrixF g = eval_matrix(s);
  MatrixF h = nullspace(g);  // dual code generators over F_{q^2}
  // subcode = F_r vectors annihilated by the dual
  MatrixF sub_basis = nullspace(coordinate_expansion(tw, h));
  MatrixF lhs = nullspace(sub_basis);    // F_r-dual of the subcode
  MatrixF rhs = trace_code(tw, h);       // trace of the dual code
  if (!row_space_equal(lhs, rhs)) return false;
  // dimension formula for the subcode through the trace side
  return sub_basis.rows == curve_.n - rank_of(rhs);
}

std::vector<DimRecord> CodeFamily::dim_series(unsigned jobs) const {
  std::vector<DimRecord> recs = gamma_ == Gamma::one_point
                                    ? series_one_point(jobs)
                                    : series_degree_three(jobs);
  check_series(recs);
  return recs;
}

void CodeFamily::check_series(const std::vector<DimRecord>& recs) const {
  const std::int64_t n = curve_.n;
  const std::int64_t h = tower_->h;
  const std::int64_t g = curve_.genus;
  const std::int64_t dg = deg_g();
  if ((std::int64_t)recs.size() != alpha_ + 1)
    throw internal_error("dimension series has the wrong length");
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const DimRecord& rec = recs[i];
    if (rec.s != (std::int64_t)i) throw internal_error("dimension series index skew");
    if (rec.k > n || rec.subdim > rec.k) throw internal_error("dimension exceeds bound");
    if (rec.subdim < 1) throw internal_error("subcode lost the all-ones word");
    if ((std::int64_t)rec.subdim < n - h * (n - (std::int64_t)rec.k))
      throw internal_error("trace bound violated");
    // exact dimension in the unobstructed range
    std::int64_t deg = rec.s * dg;
    if (2 * g - 2 < deg && deg < n && (std::int64_t)rec.k != deg - g + 1)
      throw internal_error("code dimension disagrees with the genus formula");
    if (i > 0 && (recs[i - 1].k > rec.k || recs[i - 1].subdim > rec.subdim))
      throw internal_error("dimension series not monotone");
  }
  if (recs.back().subdim != n) throw internal_error("series does not reach full dimension");
}

std::vector<DimRecord> CodeFamily::series_one_point(unsigned jobs) const {
  const TowerContext& tw = *tower_;
  const Field& F = tw.fq2;
  const std::uint32_t n = curve_.n;
  const std::uint32_t qv = curve_.q;
  const std::int64_t a = (std::int64_t)n + 2 * curve_.genus - 2;

  auto mb = monomial_basis(qv, alpha_);
  if (mb.exps.size() != n) throw internal_error("capped monomial count is not n");
  std::vector<std::uint64_t> pole(n);
  for (std::size_t t = 0; t < n; ++t)
    pole[t] = (std::uint64_t)qv * mb.exps[t].first + (std::uint64_t)(qv + 1) * mb.exps[t].second;

  // evaluation row of every capped monomial
  std::vector<std::vector<std::uint32_t>> mrow(n, std::vector<std::uint32_t>(n));
  {
    std::vector<std::uint32_t> xp(qv * qv), yp(qv);
    for (std::size_t pt = 0; pt < n; ++pt) {
      xp[0] = F.one();
      for (std::uint32_t i = 1; i < qv * qv; ++i) xp[i] = F.mul(xp[i - 1], curve_.points[pt].x);
      yp[0] = F.one();
      for (std::uint32_t i = 1; i < qv; ++i) yp[i] = F.mul(yp[i - 1], curve_.points[pt].y);
      for (std::size_t t = 0; t < n; ++t)
        mrow[t][pt] = F.mul(xp[mb.exps[t].first], yp[mb.exps[t].second]);
    }
  }
  (void)jobs;  // a single sequential sweep; nothing independent to fan out

  // The dual of the code at s is the span of the rows with pole order at
  // most n+2g-2-s. Two checked facts make that exact: value rows of
  // functions with pole order <= n+2g-2 sum to zero (so products of rows
  // from complementary prefixes pair to zero), and prefix sizes at s and
  // n+2g-2-s add up to n.
  verify_zero_sums(F, mrow, pole, (std::uint64_t)a);
  auto prefix = [&](std::int64_t s) -> std::uint32_t {
    if (s < 0) return 0;
    return (std::uint32_t)(std::upper_bound(pole.begin(), pole.end(), (std::uint64_t)s) -
                           pole.begin());
  };
  for (std::int64_t s = 0; s <= alpha_; ++s)
    if (prefix(s) + prefix(a - s) != n)
      throw internal_error("prefix sizes break the duality count");

  std::vector<DimRecord> recs(alpha_ + 1);
  SubfieldRankAcc acc(tw, n);
  std::size_t inserted = 0;
  for (std::int64_t s = alpha_; s >= 0; --s) {
    std::uint32_t dual_rows = prefix(a - s);
    while (inserted < dual_rows) acc.add(mrow[inserted++].data());
    recs[s] = {s, prefix(s), (std::uint32_t)(n - acc.rank())};
  }
  return recs;
}

std::vector<DimRecord> CodeFamily::series_degree_three(unsigned jobs) const {
  const TowerContext& tw = *tower_;
  const Field& F = tw.fq2;
  const std::uint32_t n = curve_.n;
  const std::uint32_t qv = curve_.q;
  const std::int64_t a = (std::int64_t)n + 2 * curve_.genus - 2;
  const Degree3Place& pl = *place_;
  const std::int64_t levels = alpha_;

  // basis of the functions with poles only at infinity of order <= a:
  // x^i y^j, j <= q-1, pole order qi+(q+1)j <= a, i not capped
  std::vector<std::pair<std::uint32_t, std::uint32_t>> vm;
  for (std::uint32_t j = 0; j < qv; ++j)
    for (std::uint32_t i = 0;
         (std::int64_t)qv * i + (std::int64_t)(qv + 1) * j <= a; ++i)
      vm.emplace_back(i, j);
  std::sort(vm.begin(), vm.end(), [qv](const auto& l, const auto& r) {
    return (std::uint64_t)qv * l.first + (std::uint64_t)(qv + 1) * l.second <
           (std::uint64_t)qv * r.first + (std::uint64_t)(qv + 1) * r.second;
  });
  const std::size_t nv = vm.size();
  if ((std::int64_t)nv != a - curve_.genus + 1)
    throw internal_error("function space dimension mismatch");

  // value rows (the x-exponent wraps pointwise, so plain powering is exact)
  std::uint32_t max_i = 0;
  for (auto& [i, j] : vm) max_i = std::max(max_i, i);
  std::vector<std::vector<std::uint32_t>> ev(nv, std::vector<std::uint32_t>(n));
  {
    std::vector<std::uint32_t> xp(max_i + 1), yp(qv);
    for (std::size_t pt = 0; pt < n; ++pt) {
      xp[0] = F.one();
      for (std::uint32_t i = 1; i <= max_i; ++i) xp[i] = F.mul(xp[i - 1], curve_.points[pt].x);
      yp[0] = F.one();
      for (std::uint32_t i = 1; i < qv; ++i) yp[i] = F.mul(yp[i - 1], curve_.points[pt].y);
      for (std::size_t t = 0; t < nv; ++t)
        ev[t][pt] = F.mul(xp[vm[t].first], yp[vm[t].second]);
    }
  }
  {
    std::vector<std::uint64_t> vpoles(nv);
    for (std::size_t t = 0; t < nv; ++t)
      vpoles[t] = (std::uint64_t)qv * vm[t].first + (std::uint64_t)(qv + 1) * vm[t].second;
    verify_zero_sums(F, ev, vpoles, (std::uint64_t)a);
  }

  // t-series of every basis function at the three conjugate points, to the
  // full condition depth
  const std::uint32_t depth = (std::uint32_t)levels;
  std::vector<std::vector<std::vector<F6>>> ser(3);  // [point][monomial][coeff]
  {
    const CubicExt& E = tw.fq6;
    for (int pidx = 0; pidx < 3; ++pidx) {
      BranchExpansion be = branch_expansion(tw, pl.pts[pidx], depth);
      std::vector<std::vector<F6>> px(max_i + 1), py(qv);
      px[0].assign(depth, E.zero());
      px[0][0] = E.one();
      for (std::uint32_t i = 1; i <= max_i; ++i) {
        // multiply by (a + t)
        const auto& prev = px[i - 1];
        auto& cur = px[i];
        cur.assign(depth, E.zero());
        for (std::uint32_t k = 0; k < depth; ++k) {
          cur[k] = E.mul(prev[k], be.pt.x);
          if (k) cur[k] = E.add(cur[k], prev[k - 1]);
        }
      }
      std::vector<F6> yser(depth, E.zero());
      yser[0] = be.pt.y;
      for (std::uint32_t k = 1; k < depth; ++k) yser[k] = be.c[k];
      py[0].assign(depth, E.zero());
      py[0][0] = E.one();
      for (std::uint32_t j = 1; j < qv; ++j) {
        const auto& prev = py[j - 1];
        auto& cur = py[j];
        cur.assign(depth, E.zero());
        for (std::uint32_t k1 = 0; k1 < depth; ++k1) {
          if (E.is_zero(prev[k1])) continue;
          for (std::uint32_t k2 = 0; k1 + k2 < depth; ++k2)
            cur[k1 + k2] = E.add(cur[k1 + k2], E.mul(prev[k1], yser[k2]));
        }
      }
      ser[pidx].resize(nv);
      parallel_for((std::int64_t)nv, jobs, [&](std::int64_t t) {
        const auto& xs = px[vm[t].first];
        const auto& ys = py[vm[t].second];
        std::vector<F6> prod(depth, E.zero());
        for (std::uint32_t k1 = 0; k1 < depth; ++k1) {
          if (E.is_zero(xs[k1])) continue;
          for (std::uint32_t k2 = 0; k1 + k2 < depth; ++k2)
            prod[k1 + k2] = E.add(prod[k1 + k2], E.mul(xs[k1], ys[k2]));
        }
        ser[pidx][t] = std::move(prod);
      });
    }
  }

  // Ascending vanishing-order filtration: level l forces the coefficient of
  // t^{l-1} to zero at each conjugate point. Each condition row that grows
  // the rank retires one kernel vector; the vector retired at level l spans
  // the gap between kernels at levels l-1 and l.
  OnlineElim cond(F, nv);
  std::vector<std::vector<std::uint32_t>> w_vec;
  std::vector<std::int64_t> w_death;
  w_vec.reserve(nv);
  w_death.reserve(nv);
  for (std::int64_t level = 1; level <= levels; ++level) {
    for (int pidx = 0; pidx < 3; ++pidx)
      for (std::uint32_t cc = 0; cc < 3; ++cc) {
        std::vector<std::uint32_t> row(nv);
        for (std::size_t t = 0; t < nv; ++t) row[t] = ser[pidx][t][level - 1].c[cc];
        std::size_t lead = cond.reduce(row);
        if (lead == nv) continue;
        w_vec.push_back(cond.kernel_vector(lead));
        w_death.push_back(level);
        cond.insert_reduced(std::move(row), lead);
      }
  }
  for (std::size_t f : cond.free_columns()) {
    w_vec.push_back(cond.kernel_vector(f));
    w_death.push_back(std::numeric_limits<std::int64_t>::max());
  }
  if (w_vec.size() != nv) throw internal_error("filtration lost track of the kernel");

  // value rows of the retired kernel vectors
  std::vector<std::vector<std::uint32_t>> w_row(nv);
  parallel_for((std::int64_t)nv, jobs, [&](std::int64_t w) {
    std::vector<std::uint32_t> out(n, 0);
    const auto& coeffs = w_vec[w];
    for (std::size_t t = 0; t < nv; ++t) {
      std::uint32_t c = coeffs[t];
      if (!c) continue;
      const std::uint32_t* src = ev[t].data();
      for (std::size_t j = 0; j < n; ++j) out[j] = F.add(out[j], F.mul(c, src[j]));
    }
    w_row[w] = std::move(out);
  });

  // functions surviving every condition level vanish on the whole point set
  for (std::size_t w = 0; w < nv; ++w)
    if (w_death[w] == std::numeric_limits<std::int64_t>::max())
      for (std::size_t j = 0; j < n; ++j)
        if (w_row[w][j]) throw internal_error("everywhere-regular dual function not zero");

  // descending sweep: at s the alive rows (death > s) span the dual code
  std::vector<std::vector<std::size_t>> bucket(levels + 2);
  for (std::size_t w = 0; w < nv; ++w) {
    std::int64_t d = w_death[w];
    bucket[d > levels ? levels + 1 : d].push_back(w);
  }
  std::vector<DimRecord> recs(alpha_ + 1);
  OnlineElim dual(F, n);
  SubfieldRankAcc acc(tw, n);
  for (std::int64_t s = alpha_; s >= 0; --s) {
    for (std::size_t w : bucket[s + 1]) {
      dual.insert(w_row[w]);
      acc.add(w_row[w].data());
    }
    recs[s] = {s, (std::uint32_t)(n - dual.rank()), (std::uint32_t)(n - acc.rank())};
  }
  return recs;
}

}  // namespace hermlab
