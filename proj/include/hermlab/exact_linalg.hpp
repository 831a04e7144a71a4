#pragma once
#include <cstdint>
#include <vector>

#include "hermlab/ff_tower.hpp"

namespace hermlab {

/// Dense row-major matrix over a flat finite field; entries are packed field
/// values owned by `field`.
struct MatrixF {
  const Field* field = nullptr;
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint32_t> a;

  MatrixF() = default;
  MatrixF(const Field& f, std::size_t r, std::size_t c)
      : field(&f), rows(r), cols(c), a(r * c, 0) {}

  std::uint32_t* row(std::size_t r) { return a.data() + r * cols; }
  const std::uint32_t* row(std::size_t r) const { return a.data() + r * cols; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

struct RrefResult {
  MatrixF m;  // reduced row echelon form
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
};

/// Gauss-Jordan with deterministic pivoting: leftmost eligible column, lowest
/// eligible row. Dispatches to the bit-packed path for the order-2 field.
RrefResult rref(const MatrixF& m);

std::size_t rank_of(const MatrixF& m);

/// Basis of the right nullspace {x : m x = 0}, one vector per row, ordered by
/// ascending free column. Row count is exactly cols - rank.
MatrixF nullspace(const MatrixF& m);

/// Same extraction from an already-computed RREF of a matrix with `cols`
/// columns; saves the second elimination when the caller needs both.
MatrixF kernel_from_rref(const RrefResult& r, std::size_t cols);

/// Row spaces compared as subspaces. Throws on field or column mismatch.
bool row_space_equal(const MatrixF& a, const MatrixF& b);

/// out = a * b.
MatrixF matmul(const MatrixF& a, const MatrixF& b);

/// Bit-packed matrix over GF(2).
struct F2Matrix {
  std::size_t rows = 0, cols = 0, words = 0;
  std::vector<std::uint64_t> bits;

  F2Matrix() = default;
  F2Matrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), words((c + 63) / 64), bits(r * words, 0) {}

  bool get(std::size_t r, std::size_t c) const {
    return (bits[r * words + c / 64] >> (c % 64)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t& w = bits[r * words + c / 64];
    std::uint64_t m = 1ull << (c % 64);
    if (v) w |= m; else w &= ~m;
  }
  std::uint64_t* row(std::size_t r) { return bits.data() + r * words; }
  const std::uint64_t* row(std::size_t r) const { return bits.data() + r * words; }
};

struct F2RrefResult {
  F2Matrix m;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

F2RrefResult rref_f2(const F2Matrix& m);
std::size_t rank_of_f2(const F2Matrix& m);
F2Matrix nullspace_f2(const F2Matrix& m);

F2Matrix to_f2(const MatrixF& m);
MatrixF from_f2(const F2Matrix& m, const Field& f2);

namespace detail {
/// Generic-path RREF with no F2 dispatch; exists so tests can pin the two
/// implementations against each other bit for bit.
RrefResult rref_generic(const MatrixF& m);
}  // namespace detail

}  // namespace hermlab
