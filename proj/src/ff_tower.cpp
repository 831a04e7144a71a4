#include "hermlab/ff_tower.hpp"

#include <algorithm>

namespace hermlab {
namespace {

constexpr std::uint64_t kFullTableCap = 512;   // order^2 tables up to 1 MiB
constexpr std::uint64_t kLogTableCap = 1u << 16;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; (std::uint64_t)d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// --- dense polynomial helpers over GF(p), little-endian coefficient vectors ---

using Poly = std::vector<std::uint32_t>;

int poly_deg(const Poly& f) {
  for (int i = (int)f.size() - 1; i >= 0; --i)
    if (f[i]) return i;
  return -1;
}

std::uint32_t mod_inv_prime(std::uint32_t a, std::uint32_t p) {
  // p is small and prime; Fermat.
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return (std::uint32_t)r;
}

// f mod g in place (g monic after normalization), over GF(p).
Poly poly_rem(Poly f, const Poly& g, std::uint32_t p) {
  int dg = poly_deg(g);
  std::uint32_t lead_inv = mod_inv_prime(g[dg], p);
  for (int i = poly_deg(f); i >= dg; i = poly_deg(f)) {
    std::uint64_t c = (std::uint64_t)f[i] * lead_inv % p;
    if (c)
      for (int j = 0; j <= dg; ++j) {
        std::uint64_t sub = c * g[j] % p;
        std::uint32_t& t = f[i - dg + j];
        t = (std::uint32_t)((t + p - sub) % p);
      }
    f[i] = 0;
  }
  return f;
}

Poly unpack_poly(std::uint64_t packed, std::uint32_t p, std::uint32_t len) {
  Poly f(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    f[i] = (std::uint32_t)(packed % p);
    packed /= p;
  }
  return f;
}

bool divisible_by_smaller(const Poly& f, std::uint32_t p, std::uint32_t d) {
  // trial division by every monic polynomial of degree 1..d/2
  for (std::uint32_t dd = 1; dd <= d / 2; ++dd) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < dd; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = unpack_poly(c, p, dd + 1);
      g[dd] = 1;
      Poly r = poly_rem(f, g, p);
      if (poly_deg(r) < 0) return true;
    }
  }
  return false;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t d) {
  if (d == 1) return Poly{0, 1};  // X: residue field is GF(p) itself
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < d; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly f = unpack_poly(c, p, d + 1);
    f[d] = 1;
    if (f[0] == 0) continue;  // root at zero
    if (!divisible_by_smaller(f, p, d)) return f;
  }
  throw internal_error("no irreducible polynomial found");
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> fs;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      fs.push_back((std::uint32_t)d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) fs.push_back((std::uint32_t)n);
  return fs;
}

}  // namespace

void factor_prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& m) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  p = q;
  for (std::uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) { p = d; break; }
  if (!is_prime(p)) throw std::invalid_argument("q is not a prime power");
  m = 0;
  std::uint32_t t = q;
  while (t > 1) {
    if (t % p != 0) throw std::invalid_argument("q is not a prime power");
    t /= p;
    ++m;
  }
}

Field::Field(std::uint32_t p, std::uint32_t d) : p_(p), d_(d) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (d == 0 || d > 24) throw std::invalid_argument("extension degree out of range");
  order_ = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    order_ *= p;
    if (order_ > (1ull << 26)) throw std::invalid_argument("field too large");
  }
  mod_ = smallest_irreducible(p, d);
  one_ = 1;
  binary_ = (p == 2);
  tabled_ = order_ <= kFullTableCap;
  logs_ = !tabled_ && order_ <= kLogTableCap;
  build_tables();
}

std::vector<std::uint32_t> Field::digits(std::uint32_t a) const {
  std::vector<std::uint32_t> dg(d_);
  for (std::uint32_t i = 0; i < d_; ++i) {
    dg[i] = a % p_;
    a /= p_;
  }
  return dg;
}

std::uint32_t Field::from_digits(const std::vector<std::uint32_t>& dg) const {
  if (dg.size() != d_) throw std::invalid_argument("coefficient vector length mismatch");
  std::uint64_t v = 0;
  for (std::uint32_t i = d_; i-- > 0;) {
    if (dg[i] >= p_) throw std::invalid_argument("coefficient not reduced mod p");
    v = v * p_ + dg[i];
  }
  return (std::uint32_t)v;
}

std::uint32_t Field::add_slow(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    out += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

std::uint32_t Field::neg_slow(std::uint32_t a) const {
  std::uint32_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    out += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

std::uint32_t Field::mul_slow(std::uint32_t a, std::uint32_t b) const {
  std::vector<std::uint32_t> prod(2 * d_ - 1, 0);
  auto da = digits(a), db = digits(b);
  for (std::uint32_t i = 0; i < d_; ++i)
    if (da[i])
      for (std::uint32_t j = 0; j < d_; ++j)
        prod[i + j] = (std::uint32_t)((prod[i + j] + (std::uint64_t)da[i] * db[j]) % p_);
  // reduce modulo the monic modulus
  for (std::uint32_t i = 2 * d_ - 2; i >= d_ && i < prod.size(); --i) {
    std::uint32_t c = prod[i];
    if (c) {
      for (std::uint32_t j = 0; j < d_; ++j) {
        std::uint32_t sub = (std::uint32_t)((std::uint64_t)c * mod_[j] % p_);
        prod[i - d_ + j] = (prod[i - d_ + j] + p_ - sub) % p_;
      }
      prod[i] = 0;
    }
  }
  std::uint32_t out = 0;
  for (std::uint32_t i = d_; i-- > 0;) out = out * p_ + prod[i];
  return out;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw std::invalid_argument("inverse of zero");
  if (tabled_) return invt_[a];
  if (logs_) return expt_[(order_ - 1) - logt_[a]];
  return pow(a, order_ - 2);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = one_, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

void Field::build_tables() {
  std::size_t n = (std::size_t)order_;
  if (tabled_) {
    addt_.resize(n * n);
    mult_.resize(n * n);
    negt_.resize(n);
    invt_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      negt_[a] = neg_slow((std::uint32_t)a);
      for (std::size_t b = 0; b < n; ++b) {
        addt_[a * n + b] = add_slow((std::uint32_t)a, (std::uint32_t)b);
        mult_[a * n + b] = mul_slow((std::uint32_t)a, (std::uint32_t)b);
      }
    }
    for (std::size_t a = 1; a < n; ++a)
      for (std::size_t b = 1; b < n; ++b)
        if (mult_[a * n + b] == one_) { invt_[a] = (std::uint32_t)b; break; }
    for (std::size_t a = 1; a < n; ++a)
      if (invt_[a] == 0) throw internal_error("modulus is not irreducible");
  } else if (logs_) {
    auto fs = prime_factors(order_ - 1);
    std::uint32_t g = 0;
    for (std::uint32_t cand = 2; cand < order_; ++cand) {
      bool prim = true;
      for (auto f : fs)
        if (pow_slow_for_setup(cand, (order_ - 1) / f) == one_) { prim = false; break; }
      if (prim) { g = cand; break; }
    }
    if (!g) throw internal_error("no primitive element found");
    logt_.assign(n, 0);
    expt_.assign(2 * (n - 1), 0);
    std::uint32_t cur = one_;
    for (std::size_t i = 0; i < n - 1; ++i) {
      expt_[i] = cur;
      expt_[i + (n - 1)] = cur;
      logt_[cur] = (std::uint32_t)i;
      cur = mul_slow(cur, g);
    }
    if (cur != one_) throw internal_error("primitive element order wrong");
  }
}

// pow via mul_slow, usable before tables exist
std::uint32_t Field::pow_slow_for_setup(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = one_, b = a;
  while (e) {
    if (e & 1) r = mul_slow(r, b);
    b = mul_slow(b, b);
    e >>= 1;
  }
  return r;
}

CubicExt::CubicExt(const Field& base) : base_(&base) {
  order_ = base.order() * base.order() * base.order();
  // smallest monic cubic with no base-field root
  std::uint64_t Q = base.order();
  bool found = false;
  for (std::uint64_t c = 0; c < Q * Q * Q && !found; ++c) {
    std::uint32_t c0 = (std::uint32_t)(c % Q);
    std::uint32_t c1 = (std::uint32_t)(c / Q % Q);
    std::uint32_t c2 = (std::uint32_t)(c / (Q * Q));
    bool has_root = false;
    for (std::uint64_t x = 0; x < Q; ++x) {
      std::uint32_t xv = (std::uint32_t)x;
      std::uint32_t v = base.add(
          base.add(base.mul(base.mul(xv, xv), xv),
                   base.mul(c2, base.mul(xv, xv))),
          base.add(base.mul(c1, xv), c0));
      if (v == 0) { has_root = true; break; }
    }
    if (!has_root) {
      mod_ = {c0, c1, c2, 1};
      found = true;
    }
  }
  if (!found) throw internal_error("no irreducible cubic over base field");
  // Frobenius images of the basis powers of Z
  frob_pow_[0] = one();
  F6 z{{0, base.one(), 0}};
  frob_pow_[1] = pow(z, base.order());
  frob_pow_[2] = mul(frob_pow_[1], frob_pow_[1]);
}

F6 CubicExt::mul(const F6& a, const F6& b) const {
  const Field& F = *base_;
  std::uint32_t t[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < 3; ++i)
    if (a.c[i])
      for (int j = 0; j < 3; ++j)
        t[i + j] = F.add(t[i + j], F.mul(a.c[i], b.c[j]));
  // Z^3 = -(m2 Z^2 + m1 Z + m0), applied for degrees 4 then 3
  for (int k = 4; k >= 3; --k) {
    std::uint32_t c = t[k];
    if (c) {
      t[k] = 0;
      for (int j = 0; j < 3; ++j)
        t[k - 3 + j] = F.sub(t[k - 3 + j], F.mul(c, mod_[j]));
    }
  }
  return F6{{t[0], t[1], t[2]}};
}

F6 CubicExt::pow(const F6& a, std::uint64_t e) const {
  F6 r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

F6 CubicExt::inv(const F6& a) const {
  if (is_zero(a)) throw std::invalid_argument("inverse of zero");
  return pow(a, order_ - 2);
}

F6 CubicExt::frobenius(const F6& a) const {
  // coefficients live in the base field, so they are fixed; Z maps to Z^Q
  F6 out = from_base(a.c[0]);
  out = add(out, scale(a.c[1], frob_pow_[1]));
  out = add(out, scale(a.c[2], frob_pow_[2]));
  return out;
}

TowerContext::TowerContext(std::uint32_t q_, std::uint32_t r_, std::uint32_t p_,
                           std::uint32_t m_, std::uint32_t a_)
    : q(q_),
      r(r_),
      p(p_),
      m(m_),
      a(a_),
      h(2 * m_ / a_),
      fr(p_, a_),
      fq2(p_, 2 * m_),
      fq6(fq2) {}

std::shared_ptr<const TowerContext> TowerContext::build(std::uint32_t q, std::uint32_t r) {
  std::uint32_t p, m, pr, ar;
  factor_prime_power(q, p, m);
  factor_prime_power(r, pr, ar);
  if (pr != p)
    throw std::invalid_argument("r and q must share the same characteristic");
  if ((2 * m) % ar != 0)
    throw std::invalid_argument("r does not give a subfield of the quadratic field");

  auto ctx = std::shared_ptr<TowerContext>(new TowerContext(q, r, p, m, ar));
  TowerContext& t = *ctx;
  const Field& fr = t.fr;
  const Field& f2 = t.fq2;
  std::uint64_t Q = f2.order();
  if (Q != (std::uint64_t)q * q) throw internal_error("quadratic field order mismatch");

  // embedding: canonical generator of F_r maps to the smallest root of the
  // F_r modulus inside F_{q^2}
  std::uint32_t root = NOT_IN_SUBFIELD;
  for (std::uint64_t z = 0; z < Q; ++z) {
    std::uint32_t acc = 0, zp = f2.one();
    for (std::uint32_t i = 0; i < fr.degree() + 1; ++i) {
      acc = f2.add(acc, f2.mul(f2.from_prime(fr.modulus()[i]), zp));
      zp = f2.mul(zp, (std::uint32_t)z);
    }
    if (acc == 0) { root = (std::uint32_t)z; break; }
  }
  if (root == NOT_IN_SUBFIELD) throw internal_error("subfield embedding root not found");

  t.embed_r.assign(r, 0);
  for (std::uint32_t x = 0; x < r; ++x) {
    auto dg = fr.digits(x);
    std::uint32_t acc = 0, rp = f2.one();
    for (std::uint32_t i = 0; i < fr.degree(); ++i) {
      acc = f2.add(acc, f2.mul(f2.from_prime(dg[i]), rp));
      rp = f2.mul(rp, root);
    }
    t.embed_r[x] = acc;
  }
  // ring homomorphism checks, exhaustive at these sizes
  if (t.embed_r[fr.one()] != f2.one()) throw internal_error("embedding does not fix 1");
  for (std::uint32_t x = 0; x < r; ++x)
    for (std::uint32_t y = 0; y < r; ++y) {
      if (t.embed_r[fr.add(x, y)] != f2.add(t.embed_r[x], t.embed_r[y]))
        throw internal_error("embedding not additive");
      if (t.embed_r[fr.mul(x, y)] != f2.mul(t.embed_r[x], t.embed_r[y]))
        throw internal_error("embedding not multiplicative");
    }

  t.inv_embed.assign(Q, NOT_IN_SUBFIELD);
  for (std::uint32_t x = 0; x < r; ++x) {
    if (t.inv_embed[t.embed_r[x]] != NOT_IN_SUBFIELD)
      throw internal_error("embedding not injective");
    t.inv_embed[t.embed_r[x]] = x;
  }

  // F_r-basis of F_{q^2}: powers of the canonical generator X. X generates
  // F_{q^2} over the prime field, so its minimal polynomial over F_r has
  // degree exactly h and the first h powers are F_r-independent.
  if (f2.degree() < 2) throw internal_error("quadratic field has degree < 2");
  t.basis.assign(t.h, 0);
  std::uint32_t gen = p;  // packed representation of X
  for (std::uint32_t c = 0; c < t.h; ++c) t.basis[c] = f2.pow(gen, c);

  // coordinates by exhaustive span enumeration; also proves the basis spans
  t.coords.assign((std::size_t)Q * t.h, NOT_IN_SUBFIELD);
  std::vector<std::uint32_t> tuple(t.h, 0);
  std::uint64_t combos = 1;
  for (std::uint32_t c = 0; c < t.h; ++c) combos *= r;
  if (combos != Q) throw internal_error("r^h != q^2");
  std::vector<bool> seen(Q, false);
  for (std::uint64_t idx = 0; idx < combos; ++idx) {
    std::uint64_t rest = idx;
    std::uint32_t x = 0;
    for (std::uint32_t c = 0; c < t.h; ++c) {
      tuple[c] = (std::uint32_t)(rest % r);
      rest /= r;
      x = f2.add(x, f2.mul(t.embed_r[tuple[c]], t.basis[c]));
    }
    if (seen[x]) throw internal_error("basis does not span the quadratic field");
    seen[x] = true;
    for (std::uint32_t c = 0; c < t.h; ++c) t.coords[(std::size_t)x * t.h + c] = tuple[c];
  }

  // relative trace x + x^r + ... + x^(r^(h-1)), landing in the embedded F_r
  t.trace_tab.assign(Q, 0);
  for (std::uint64_t x = 0; x < Q; ++x) {
    std::uint32_t acc = 0, term = (std::uint32_t)x;
    for (std::uint32_t i = 0; i < t.h; ++i) {
      acc = f2.add(acc, term);
      term = f2.pow(term, r);
    }
    std::uint32_t back = t.inv_embed[acc];
    if (back == NOT_IN_SUBFIELD) throw internal_error("trace value outside subfield");
    t.trace_tab[x] = back;
  }
  return ctx;
}

}  // namespace hermlab
