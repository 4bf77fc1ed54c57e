#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cosmetic {

/// Reduced rational num/den with den > 0.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Fraction make(std::int64_t n, std::int64_t d) {
    if (d == 0)
      throw std::domain_error("fraction with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const auto g = std::gcd(n, d);
    return {n / g, d / g};
  }

  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Fraction &, const Fraction &) = default;
  friend bool operator<(const Fraction &a, const Fraction &b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
};

} // namespace cosmetic
