#pragma once

#include <cstdint>
#include <string>

#include "bsq/errors.hpp"

namespace bsq {

/// Exact rational with int64 numerator/denominator, always normalized
/// (gcd 1, positive denominator). Arithmetic goes through 128-bit
/// intermediates; results that do not fit back into int64 raise LimitError.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n) {}
  Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

  static Rational make(__int128 n, __int128 d);

  friend Rational operator+(const Rational& x, const Rational& y) {
    return make(i128(x.num) * y.den + i128(y.num) * x.den,
                i128(x.den) * y.den);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return make(i128(x.num) * y.den - i128(y.num) * x.den,
                i128(x.den) * y.den);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return make(i128(x.num) * y.num, i128(x.den) * y.den);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    return make(i128(x.num) * y.den, i128(x.den) * y.num);
  }

  friend bool operator==(const Rational&, const Rational&) = default;

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

 private:
  using i128 = __int128;
};

inline Rational Rational::make(__int128 n, __int128 d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  unsigned __int128 a = n < 0 ? static_cast<unsigned __int128>(-n)
                              : static_cast<unsigned __int128>(n);
  unsigned __int128 b = static_cast<unsigned __int128>(d);
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= static_cast<__int128>(a);
    d /= static_cast<__int128>(a);
  }
  if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
    throw LimitError("rational overflow");
  Rational r;
  r.num = static_cast<std::int64_t>(n);
  r.den = static_cast<std::int64_t>(d);
  return r;
}

}  // namespace bsq
