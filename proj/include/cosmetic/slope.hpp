#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cosmetic {

/// A slope p/q on the peripheral torus, in meridian-longitude coordinates.
///
/// Always normalized: gcd(|num|, den) = 1, den >= 0, the meridian is 1/0 and
/// the zero slope is 0/1. Construct through Slope::make or parse_slope.
class Slope {
public:
  static Slope make(std::int64_t num, std::int64_t den);
  static Slope integer(std::int64_t n) { return make(n, 1); }
  static Slope meridian() { return make(1, 0); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_meridian() const { return den_ == 0; }
  bool is_integral() const { return den_ == 1; }
  bool numerator_is_even() const { return num_ % 2 == 0; }

  Slope operator-() const { return make(-num_, den_); }

  std::string str() const;

  friend bool operator==(const Slope &, const Slope &) = default;
  /// Total order for containers: by value as a rational, meridian last.
  friend bool operator<(const Slope &a, const Slope &b);

private:
  Slope(std::int64_t n, std::int64_t d) : num_(n), den_(d) {}
  std::int64_t num_;
  std::int64_t den_;
};

/// Minimal geometric intersection number |p*s - q*r| of p/q and r/s.
std::int64_t distance(const Slope &a, const Slope &b);

inline bool numerator_is_even(const Slope &s) { return s.numerator_is_even(); }

/// Accepts "p/q", "n" (read as n/1) and "1/0". Throws std::invalid_argument.
Slope parse_slope(std::string_view text);

} // namespace cosmetic
