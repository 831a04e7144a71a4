#pragma once
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hermlab {

/// Exact rational on int64 with __int128 intermediates. Denominator kept > 0,
/// fraction always reduced. Magnitudes in this project stay far below the
/// overflow check thresholds (numerators ~1e15 worst case).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  static Rational make128(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    Rational r;
    r.num = narrow(n);
    r.den = narrow(d);
    return r;
  }

  void assign(std::int64_t n, std::int64_t d) {
    Rational r = make128(n, d);
    num = r.num;
    den = r.den;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make128((__int128)a.num * b.den + (__int128)b.num * a.den,
                   (__int128)a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make128((__int128)a.num * b.den - (__int128)b.num * a.den,
                   (__int128)a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make128((__int128)a.num * b.num, (__int128)a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::invalid_argument("rational: division by zero");
    return make128((__int128)a.num * b.den, (__int128)a.den * b.num);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  /// Exact fixed-point rendering with round-half-to-even at the last digit.
  /// Ties occur in earnest here (denominators are often powers of two), and
  /// half-even is the rule that reproduces the frozen reference values.
  std::string render(int decimals) const {
    if (decimals < 0 || decimals > 18) throw std::invalid_argument("rational: bad decimals");
    __int128 p10 = 1;
    for (int i = 0; i < decimals; ++i) p10 *= 10;
    bool neg = num < 0;
    __int128 n = neg ? -(__int128)num : (__int128)num;
    __int128 scaled = n * p10;
    __int128 q = scaled / den;
    __int128 rem = scaled % den;
    __int128 twice = 2 * rem;
    if (twice > den || (twice == den && (q & 1))) ++q;
    std::string digits = to_string128(q);
    std::string out;
    if (decimals == 0) {
      out = digits;
    } else {
      while ((int)digits.size() <= decimals) digits.insert(digits.begin(), '0');
      out = digits.substr(0, digits.size() - decimals) + "." +
            digits.substr(digits.size() - decimals);
    }
    if (neg && q != 0) out.insert(out.begin(), '-');
    return out;
  }

  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
  }
  static std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational: overflow");
    return static_cast<std::int64_t>(v);
  }
  static std::string to_string128(__int128 v) {
    if (v == 0) return "0";
    std::string s;
    bool neg = v < 0;
    if (neg) v = -v;
    while (v > 0) { s.insert(s.begin(), char('0' + (int)(v % 10))); v /= 10; }
    if (neg) s.insert(s.begin(), '-');
    return s;
  }
};

}  // namespace hermlab
