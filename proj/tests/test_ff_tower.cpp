#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hermlab/ff_tower.hpp"

using namespace hermlab;

TEST_CASE("prime power factoring") {
  std::uint32_t p, m;
  factor_prime_power(16, p, m);
  CHECK(p == 2);
  CHECK(m == 4);
  factor_prime_power(13, p, m);
  CHECK(p == 13);
  CHECK(m == 1);
  CHECK_THROWS_AS(factor_prime_power(12, p, m), std::invalid_argument);
  CHECK_THROWS_AS(factor_prime_power(1, p, m), std::invalid_argument);
}

TEST_CASE("canonical moduli are the expected small polynomials") {
  Field f4(2, 2);
  CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});  // X^2+X+1
  Field f16(2, 4);
  CHECK(f16.modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});  // X^4+X+1
  Field f9(3, 2);
  CHECK(f9.modulus() == std::vector<std::uint32_t>{1, 0, 1});  // X^2+1
  Field f25(5, 2);
  CHECK(f25.modulus() == std::vector<std::uint32_t>{2, 0, 1});  // X^2+2
  Field f169(13, 2);
  CHECK(f169.modulus() == std::vector<std::uint32_t>{2, 0, 1});  // X^2+2
}

TEST_CASE("field axioms hold exhaustively in small fields") {
  for (auto [p, d] : {std::pair<std::uint32_t, std::uint32_t>{2, 2},
                      {2, 4}, {3, 2}, {5, 2}, {7, 1}}) {
    Field F(p, d);
    std::uint64_t n = F.order();
    for (std::uint64_t a = 0; a < n; ++a) {
      CHECK(F.add((std::uint32_t)a, 0) == a);
      CHECK(F.mul((std::uint32_t)a, F.one()) == a);
      CHECK(F.add((std::uint32_t)a, F.neg((std::uint32_t)a)) == 0);
      if (a) CHECK(F.mul((std::uint32_t)a, F.inv((std::uint32_t)a)) == F.one());
      // Frobenius fixed points: x^(p^d) == x
      CHECK(F.pow((std::uint32_t)a, n) == a);
      for (std::uint64_t b = 0; b < n; ++b) {
        CHECK(F.add((std::uint32_t)a, (std::uint32_t)b) ==
              F.add((std::uint32_t)b, (std::uint32_t)a));
        CHECK(F.mul((std::uint32_t)a, (std::uint32_t)b) ==
              F.mul((std::uint32_t)b, (std::uint32_t)a));
      }
    }
  }
}

TEST_CASE("distributivity sampled in F_64 and F_169") {
  std::mt19937_64 rng(7);
  for (auto [p, d] : {std::pair<std::uint32_t, std::uint32_t>{2, 6}, {13, 2}}) {
    Field F(p, d);
    std::uniform_int_distribution<std::uint32_t> U(0, (std::uint32_t)F.order() - 1);
    for (int i = 0; i < 500; ++i) {
      std::uint32_t a = U(rng), b = U(rng), c = U(rng);
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
    }
  }
}

TEST_CASE("cube of the F4 generator is one") {
  Field f4(2, 2);
  std::uint32_t w = 2;  // packed X
  CHECK(f4.pow(w, 3) == 1);
  CHECK(f4.mul(w, f4.mul(w, w)) == 1);
}

TEST_CASE("element digit round trip") {
  Field F(3, 4);
  for (std::uint32_t a = 0; a < F.order(); a += 7) {
    CHECK(F.from_digits(F.digits(a)) == a);
  }
  CHECK_THROWS_AS(F.from_digits({1, 2}), std::invalid_argument);
}

TEST_CASE("mixed-field element operations throw") {
  Field f4(2, 2), f16(2, 4);
  FieldElem a(f4, 1), b(f16, 1);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  FieldElem c(f4, 2), d(f4, 3);
  CHECK((c * d).v == f4.mul(2, 3));
  CHECK_THROWS_AS(FieldElem(f4, 9), std::invalid_argument);
}

TEST_CASE("tower construction validates inputs") {
  CHECK_NOTHROW(TowerContext::build(2, 2));
  CHECK_NOTHROW(TowerContext::build(4, 2));
  CHECK_NOTHROW(TowerContext::build(8, 2));
  CHECK_NOTHROW(TowerContext::build(9, 3));
  CHECK_THROWS_AS(TowerContext::build(4, 8), std::invalid_argument);  // 3 does not divide 4
  CHECK_THROWS_AS(TowerContext::build(4, 3), std::invalid_argument);  // wrong characteristic
  CHECK_THROWS_AS(TowerContext::build(6, 2), std::invalid_argument);  // not a prime power
}

TEST_CASE("tower degrees and orders") {
  auto t = TowerContext::build(4, 2);
  CHECK(t->h == 4);
  CHECK(t->fq2.order() == 16);
  CHECK(t->fq6.order() == 4096);
  auto t2 = TowerContext::build(8, 8);
  CHECK(t2->h == 2);
  CHECK(t2->fq2.order() == 64);
}

TEST_CASE("trace of the F4 generator over F2 is one") {
  // Tr(x) = x + x^2 on F4; the generator w satisfies w^2 = w+1, so Tr(w) = 1.
  auto t = TowerContext::build(2, 2);
  CHECK(t->trace(2) == 1);
  CHECK(t->trace(0) == 0);
  CHECK(t->trace(1) == 0);  // 1 + 1 = 0 in characteristic 2
}

TEST_CASE("trace is F_r-linear and surjective") {
  for (auto [q, r] : {std::pair<std::uint32_t, std::uint32_t>{5, 5}, {4, 2}, {3, 3}}) {
    auto t = TowerContext::build(q, r);
    const Field& f2 = t->fq2;
    const Field& fr = t->fr;
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint32_t> U(0, (std::uint32_t)f2.order() - 1);
    std::uniform_int_distribution<std::uint32_t> Ur(0, r - 1);
    for (int i = 0; i < 100; ++i) {
      std::uint32_t x = U(rng), y = U(rng), lam = Ur(rng);
      CHECK(t->trace(f2.add(x, y)) == fr.add(t->trace(x), t->trace(y)));
      CHECK(t->trace(f2.mul(t->embed_r[lam], x)) == fr.mul(lam, t->trace(x)));
    }
    std::vector<bool> hit(r, false);
    for (std::uint32_t x = 0; x < f2.order(); ++x) hit[t->trace(x)] = true;
    for (std::uint32_t v = 0; v < r; ++v) CHECK(hit[v]);
  }
}

TEST_CASE("trace on embedded subfield elements is h * x") {
  auto t = TowerContext::build(4, 2);  // h = 4, so trace of embedded x is 4x = 0 mod 2
  for (std::uint32_t x = 0; x < 2; ++x)
    CHECK(t->trace(t->embed_r[x]) == ((t->h % t->p) * x) % t->p);
  auto t2 = TowerContext::build(3, 3);  // h = 2: trace of embedded x is 2x
  for (std::uint32_t x = 0; x < 3; ++x)
    CHECK(t2->trace(t2->embed_r[x]) == t2->fr.mul(t2->fr.from_prime(2), x));
}

TEST_CASE("coordinates invert the basis expansion exhaustively") {
  for (auto [q, r] : {std::pair<std::uint32_t, std::uint32_t>{4, 2}, {5, 5}, {9, 3}}) {
    auto t = TowerContext::build(q, r);
    const Field& f2 = t->fq2;
    for (std::uint32_t x = 0; x < f2.order(); ++x) {
      std::uint32_t back = 0;
      for (std::uint32_t c = 0; c < t->h; ++c)
        back = f2.add(back, f2.mul(t->embed_r[t->coord(x, c)], t->basis[c]));
      CHECK(back == x);
    }
    // coords of zero and of basis elements
    for (std::uint32_t c = 0; c < t->h; ++c) {
      CHECK(t->coord(0, c) == 0);
      for (std::uint32_t c2 = 0; c2 < t->h; ++c2)
        CHECK(t->coord(t->basis[c], c2) == (c == c2 ? t->fr.one() : 0));
    }
  }
}

TEST_CASE("cubic extension arithmetic and Frobenius") {
  auto t = TowerContext::build(2, 2);
  const CubicExt& E = t->fq6;
  CHECK(E.order() == 64);
  // exhaustive field axioms at q=2
  std::vector<F6> all;
  for (std::uint64_t v = 0; v < 64; ++v) all.push_back(E.deserialize(v));
  for (const auto& x : all) {
    CHECK(E.serialize(E.add(x, E.neg(x))) == 0);
    if (!E.is_zero(x)) CHECK(E.mul(x, E.inv(x)) == E.one());
    CHECK(E.pow(x, 64) == x);  // x^(q^6) = x
    // Frobenius: cube acts as identity, matches pow
    F6 fr = E.frobenius(x);
    CHECK(fr == E.pow(x, 4));
    CHECK(E.frobenius(E.frobenius(fr)) == x);
  }
  // base field is fixed pointwise
  for (std::uint32_t c = 0; c < 4; ++c) {
    F6 e = E.from_base(c);
    CHECK(E.frobenius(e) == e);
    CHECK(E.in_base(e));
    CHECK(E.to_base(e) == c);
  }
  CHECK_THROWS_AS(E.to_base(E.deserialize(5)), internal_error);
}

TEST_CASE("cubic extension multiplication sampled at q=5") {
  auto t = TowerContext::build(5, 5);
  const CubicExt& E = t->fq6;
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> U(0, E.order() - 1);
  for (int i = 0; i < 200; ++i) {
    F6 x = E.deserialize(U(rng)), y = E.deserialize(U(rng)), z = E.deserialize(U(rng));
    CHECK(E.mul(x, y) == E.mul(y, x));
    CHECK(E.mul(E.mul(x, y), z) == E.mul(x, E.mul(y, z)));
    CHECK(E.mul(x, E.add(y, z)) == E.add(E.mul(x, y), E.mul(x, z)));
    if (!E.is_zero(x)) CHECK(E.mul(x, E.inv(x)) == E.one());
  }
}
