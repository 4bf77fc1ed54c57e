#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cosmetic {

/// Integer Laurent polynomial in t, stored densely from the lowest nonzero
/// exponent. The zero polynomial has no coefficients.
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;
  static LaurentPolynomial constant(std::int64_t c);
  /// c * t^e
  static LaurentPolynomial monomial(std::int64_t c, std::int64_t e);
  static LaurentPolynomial from_map(const std::map<std::int64_t, std::int64_t> &terms);

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t low_degree() const { return low_; }
  std::int64_t high_degree() const {
    return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  std::int64_t coeff(std::int64_t e) const;
  std::map<std::int64_t, std::int64_t> terms() const;

  /// Exact value at an integer point; requires t != 0 if negative exponents.
  std::int64_t eval(std::int64_t t) const;
  LaurentPolynomial derivative() const;

  /// Multiplies by +-t^m so the result is symmetric under t -> 1/t and
  /// evaluates to 1 at t = 1. Throws InvariantViolation if no unit does.
  LaurentPolynomial alexander_normalized() const;

  bool is_symmetric() const;

  LaurentPolynomial operator+(const LaurentPolynomial &o) const;
  LaurentPolynomial operator-(const LaurentPolynomial &o) const;
  LaurentPolynomial operator*(const LaurentPolynomial &o) const;
  LaurentPolynomial operator-() const;
  LaurentPolynomial shifted(std::int64_t m) const;

  std::string str() const;

  friend bool operator==(const LaurentPolynomial &, const LaurentPolynomial &) = default;

private:
  LaurentPolynomial(std::int64_t low, std::vector<std::int64_t> c);
  void trim();

  std::int64_t low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

} // namespace cosmetic
