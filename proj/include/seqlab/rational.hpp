#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "seqlab/error.hpp"

namespace seqlab {

// Exact rational over int64. All densities and certificate bounds handled
// here are tiny (denominators < 2^26), so cross products in __int128 never
// overflow.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t n, std::int64_t d) {
    if (d == 0) fail(ErrorCode::invalid_argument, "rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return Rational{n, d};
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Decimal expansion truncated (not rounded) to `digits` places, e.g.
  // 4708/16382 -> "0.2873". Pre: value >= 0, digits <= 15.
  std::string decimal_truncated(int digits) const {
    __int128 scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    __int128 scaled = static_cast<__int128>(num) * scale / den;
    std::int64_t whole = static_cast<std::int64_t>(scaled / scale);
    std::int64_t frac = static_cast<std::int64_t>(scaled % scale);
    std::string f = std::to_string(frac);
    f.insert(f.begin(), static_cast<std::size_t>(digits) - f.size(), '0');
    return std::to_string(whole) + "." + f;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return of(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return of(a.num * b.den - b.num * a.den, a.den * b.den);
  }
};

}  // namespace seqlab
