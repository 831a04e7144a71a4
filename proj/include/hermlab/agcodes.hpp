#pragma once

// Evaluation codes from one-point divisors sP_inf and from multiples sR of
// the degree-3 place, their subfield subcodes over F_r, and the per-s
// dimension series the rate statistics are built on.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hermlab/exact_linalg.hpp"
#include "hermlab/herm_curve.hpp"
#include "hermlab/rr_spaces.hpp"

namespace hermlab {

enum class Gamma { one_point, degree_three };

std::string gamma_token(Gamma g);  // "1pt" / "deg3"
std::optional<Gamma> gamma_from_token(std::string_view tok);

struct DimRecord {
  std::int64_t s = 0;
  std::uint32_t k = 0;       // code dimension over the quadratic field
  std::uint32_t subdim = 0;  // subfield subcode dimension over F_r
};

// One F_r row per generator row per basis element: Tr(beta_c * g_ij).
MatrixF trace_code(const TowerContext& tw, const MatrixF& gens);

// Coordinate expansion of a quadratic-field matrix: h F_r rows per input row,
// entry (i*h+c, j) = coord_c(m[i][j]). An F_r vector is annihilated by m
// exactly when it is annihilated by the expansion.
MatrixF coordinate_expansion(const TowerContext& tw, const MatrixF& m);

// n - rank_{F_r}(coordinate expansion of the parity rows); parity rows may be
// any spanning set of the dual code, redundancy included.
std::uint32_t subcode_dim_from_parity(const TowerContext& tw, const MatrixF& parity,
                                      std::uint32_t n);

// Spanning-set evaluation matrix for the degree-3 construction at any place:
// rows are numerator evaluations scaled by L(R)^{-u}, computed through the
// cubic extension with a rationality assertion on every entry.
MatrixF deg3_eval_matrix(const CurveCtx& curve, const Degree3Place& place,
                         std::int64_t s);

class CodeFamily {
 public:
  CodeFamily(std::uint32_t q, std::uint32_t r, Gamma gamma);

  std::uint32_t q() const { return curve_.q; }
  std::uint32_t r() const { return tower_->r; }
  Gamma gamma() const { return gamma_; }
  std::uint32_t deg_g() const { return gamma_ == Gamma::degree_three ? 3 : 1; }
  std::uint32_t n() const { return curve_.n; }
  std::uint32_t genus() const { return curve_.genus; }
  const TowerContext& tower() const { return *tower_; }
  const CurveCtx& curve() const { return curve_; }
  const Degree3Place* place() const { return place_ ? &*place_ : nullptr; }

  // Last index of the dimension series: the smallest s at which the subcode
  // dimension is guaranteed to reach n. One past n+2g-2 for the one-point
  // family (the dual at n+2g-2 is the all-ones word, so dimension n-1 there)
  // and ceil((n+2g-2)/3) for the degree-3 family.
  std::int64_t alpha() const { return alpha_; }

  MatrixF eval_matrix(std::int64_t s) const;
  std::uint32_t code_dim(std::int64_t s) const;
  std::uint32_t subfield_subcode_dim(std::int64_t s) const;

  // Delsarte identity at s: the F_r-dual of the subfield subcode equals the
  // trace of the dual code; also cross-checks the dimension formula
  // subdim = n - dim Tr(C-dual).
  bool verify_delsarte(std::int64_t s) const;

  // Records for s = 0..alpha(), computed through the dual filtration: the
  // dual code at s is spanned by value rows of the functions with poles only
  // at infinity that vanish to order s on the divisor, so one descending
  // sweep with incremental eliminations yields every k and subdim. The
  // residue identity this rests on is verified at runtime (value rows of
  // pole order <= n+2g-2 sum to zero), and the whole series is cross-checked
  // against the plain spanning-set path in the test suite. jobs > 1 fans the
  // series-expansion stages out over a thread pool.
  std::vector<DimRecord> dim_series(unsigned jobs = 1) const;

 private:
  std::shared_ptr<const TowerContext> tower_;
  CurveCtx curve_;
  std::optional<Degree3Place> place_;
  Gamma gamma_;
  std::int64_t alpha_ = 0;

  std::vector<DimRecord> series_one_point(unsigned jobs) const;
  std::vector<DimRecord> series_degree_three(unsigned jobs) const;
  void check_series(const std::vector<DimRecord>& recs) const;
};

}  // namespace hermlab
