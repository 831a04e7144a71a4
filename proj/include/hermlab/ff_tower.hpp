#pragma once
#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hermlab {

/// Raised when a runtime consistency check fails: symptoms of a bug in this
/// library, never of bad user input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// GF(p^d) with elements packed as integers in [0, p^d): the packed value is
/// the base-p little-endian digit encoding of the coefficient vector of the
/// residue class modulo a canonical irreducible polynomial.
///
/// The modulus is the monic irreducible of degree d whose non-leading
/// coefficient vector has the smallest packed integer value; this makes every
/// field construction deterministic across runs and platforms.
class Field {
 public:
  Field(std::uint32_t p, std::uint32_t d);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return d_; }
  std::uint64_t order() const { return order_; }
  /// Monic modulus, length d+1, coefficients in [0,p), modulus()[d] == 1.
  const std::vector<std::uint32_t>& modulus() const { return mod_; }

  std::uint32_t zero() const { return 0; }
  std::uint32_t one() const { return one_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (binary_) return a ^ b;
    if (tabled_) return addt_[(std::size_t)a * order_ + b];
    return add_slow(a, b);
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (binary_) return a;
    if (tabled_) return negt_[a];
    return neg_slow(a);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (tabled_) return mult_[(std::size_t)a * order_ + b];
    if (logs_) {
      if (a == 0 || b == 0) return 0;
      return expt_[logt_[a] + logt_[b]];
    }
    return mul_slow(a, b);
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  /// Embed a prime-field scalar (reduced mod p).
  std::uint32_t from_prime(std::uint64_t c) const { return (std::uint32_t)(c % p_); }

  /// Row of the multiplication table for a fixed left operand, or nullptr
  /// when the field is not fully tabled. Lets hot loops trade a call for a
  /// single indexed load.
  const std::uint32_t* mul_row_ptr(std::uint32_t a) const {
    return tabled_ ? mult_.data() + (std::size_t)a * order_ : nullptr;
  }
  /// Full addition table (order x order) or nullptr.
  const std::uint32_t* add_table() const { return tabled_ ? addt_.data() : nullptr; }

  /// Little-endian coefficient digits, length d.
  std::vector<std::uint32_t> digits(std::uint32_t a) const;
  std::uint32_t from_digits(const std::vector<std::uint32_t>& dg) const;

  bool operator==(const Field& o) const {
    return p_ == o.p_ && d_ == o.d_ && mod_ == o.mod_;
  }

 private:
  std::uint32_t p_, d_;
  std::uint64_t order_;
  std::uint32_t one_;
  bool binary_;   // p == 2: addition is XOR
  bool tabled_;   // full add/mul/inv tables
  bool logs_;     // log/antilog multiplication
  std::vector<std::uint32_t> mod_;
  std::vector<std::uint32_t> addt_, mult_, negt_, invt_;
  std::vector<std::uint32_t> logt_, expt_;

  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_slow(std::uint32_t a) const;
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow_slow_for_setup(std::uint32_t a, std::uint64_t e) const;
  void build_tables();
};

/// Value-with-field wrapper for call sites where readability beats speed.
/// Mixed-field operands are a caller bug and throw.
struct FieldElem {
  const Field* field = nullptr;
  std::uint32_t v = 0;

  FieldElem() = default;
  FieldElem(const Field& f, std::uint32_t value) : field(&f), v(value) {
    if (value >= f.order()) throw std::invalid_argument("field element out of range");
  }
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    check(a, b);
    return FieldElem(*a.field, a.field->add(a.v, b.v));
  }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    check(a, b);
    return FieldElem(*a.field, a.field->sub(a.v, b.v));
  }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    check(a, b);
    return FieldElem(*a.field, a.field->mul(a.v, b.v));
  }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    check(a, b);
    return FieldElem(*a.field, a.field->mul(a.v, a.field->inv(b.v)));
  }
  FieldElem pow(std::uint64_t e) const { return FieldElem(*field, field->pow(v, e)); }
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    check(a, b);
    return a.v == b.v;
  }

 private:
  static void check(const FieldElem& a, const FieldElem& b) {
    if (!a.field || !b.field || !(*a.field == *b.field))
      throw std::invalid_argument("mixed-field operands");
  }
};

/// Element of the cubic extension: three base-field coordinates, low first.
struct F6 {
  std::array<std::uint32_t, 3> c{0, 0, 0};
  friend bool operator==(const F6& a, const F6& b) { return a.c == b.c; }
  friend bool operator!=(const F6& a, const F6& b) { return !(a == b); }
};

/// Degree-3 extension of a flat base field, used for the top floor of the
/// tower. The modulus is the monic cubic irreducible over the base with the
/// smallest packed coefficient value (irreducible == no base-field root).
class CubicExt {
 public:
  explicit CubicExt(const Field& base);

  const Field& base() const { return *base_; }
  std::uint64_t order() const { return order_; }
  const std::array<std::uint32_t, 4>& modulus() const { return mod_; }

  F6 zero() const { return F6{}; }
  F6 one() const { return from_base(base_->one()); }
  F6 from_base(std::uint32_t c) const { return F6{{c, 0, 0}}; }
  bool in_base(const F6& a) const { return a.c[1] == 0 && a.c[2] == 0; }
  /// Base-field coordinate of an element already known to lie in the base.
  std::uint32_t to_base(const F6& a) const {
    if (!in_base(a)) throw internal_error("cubic-extension value outside base field");
    return a.c[0];
  }

  F6 add(const F6& a, const F6& b) const {
    return F6{{base_->add(a.c[0], b.c[0]), base_->add(a.c[1], b.c[1]),
               base_->add(a.c[2], b.c[2])}};
  }
  F6 neg(const F6& a) const {
    return F6{{base_->neg(a.c[0]), base_->neg(a.c[1]), base_->neg(a.c[2])}};
  }
  F6 sub(const F6& a, const F6& b) const { return add(a, neg(b)); }
  F6 mul(const F6& a, const F6& b) const;
  F6 scale(std::uint32_t s, const F6& a) const {
    return F6{{base_->mul(s, a.c[0]), base_->mul(s, a.c[1]), base_->mul(s, a.c[2])}};
  }
  F6 inv(const F6& a) const;
  F6 pow(const F6& a, std::uint64_t e) const;
  bool is_zero(const F6& a) const { return a.c[0] == 0 && a.c[1] == 0 && a.c[2] == 0; }

  /// x -> x^(base order): the Galois generator fixing the base field.
  F6 frobenius(const F6& a) const;

  std::uint64_t serialize(const F6& a) const {
    std::uint64_t Q = base_->order();
    return a.c[0] + Q * (a.c[1] + Q * a.c[2]);
  }
  F6 deserialize(std::uint64_t v) const {
    std::uint64_t Q = base_->order();
    F6 a;
    a.c[0] = (std::uint32_t)(v % Q);
    v /= Q;
    a.c[1] = (std::uint32_t)(v % Q);
    v /= Q;
    a.c[2] = (std::uint32_t)(v % Q);
    if (a.c[2] >= Q) throw std::invalid_argument("serialized value out of range");
    return a;
  }

 private:
  const Field* base_;
  std::uint64_t order_;
  std::array<std::uint32_t, 4> mod_;  // monic: mod_[3] == 1
  std::array<F6, 3> frob_pow_;        // Z^(Q*k) for k = 0,1,2
};

/// F_r inside F_{q^2} inside F_{q^6}, with the coordinate and trace machinery
/// the code constructions need. q = p^m, r = p^a, a | 2m, h = 2m/a.
class TowerContext {
 public:
  std::uint32_t q, r, p, m, a, h;
  Field fr;
  Field fq2;
  CubicExt fq6;

  /// Packed F_r value -> packed F_{q^2} value of the canonical embedding.
  std::vector<std::uint32_t> embed_r;
  /// Packed F_{q^2} value -> packed F_r value, or NOT_IN_SUBFIELD.
  std::vector<std::uint32_t> inv_embed;
  static constexpr std::uint32_t NOT_IN_SUBFIELD = 0xffffffffu;
  /// F_r-basis of F_{q^2}: powers 0..h-1 of the canonical generator.
  std::vector<std::uint32_t> basis;
  /// coords[x*h + c] = c-th F_r coordinate of x in that basis.
  std::vector<std::uint32_t> coords;
  /// Relative trace F_{q^2} -> F_r, tabulated per packed value.
  std::vector<std::uint32_t> trace_tab;

  std::uint32_t trace(std::uint32_t x) const { return trace_tab[x]; }
  std::uint32_t coord(std::uint32_t x, std::uint32_t c) const { return coords[(std::size_t)x * h + c]; }

  static std::shared_ptr<const TowerContext> build(std::uint32_t q, std::uint32_t r);

 private:
  TowerContext(std::uint32_t q_, std::uint32_t r_, std::uint32_t p_, std::uint32_t m_,
               std::uint32_t a_);
};

/// q = p^m with p prime; throws otherwise.
void factor_prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& m);

}  // namespace hermlab
