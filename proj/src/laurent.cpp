#include "cosmetic/laurent.hpp"

#include "cosmetic/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace cosmetic {

LaurentPolynomial::LaurentPolynomial(std::int64_t low,
                                     std::vector<std::int64_t> c)
    : low_(low), coeffs_(std::move(c)) {
  trim();
}

void LaurentPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                                  [](auto c) { return c != 0; });
  low_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty())
    low_ = 0;
}

LaurentPolynomial LaurentPolynomial::constant(std::int64_t c) {
  return monomial(c, 0);
}

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t c, std::int64_t e) {
  return LaurentPolynomial(e, {c});
}

LaurentPolynomial
LaurentPolynomial::from_map(const std::map<std::int64_t, std::int64_t> &terms) {
  if (terms.empty())
    return {};
  const auto low = terms.begin()->first;
  std::vector<std::int64_t> c(
      static_cast<std::size_t>(terms.rbegin()->first - low + 1), 0);
  for (const auto &[e, v] : terms)
    c[static_cast<std::size_t>(e - low)] += v;
  return LaurentPolynomial(low, std::move(c));
}

std::int64_t LaurentPolynomial::coeff(std::int64_t e) const {
  if (is_zero() || e < low_ || e > high_degree())
    return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

std::map<std::int64_t, std::int64_t> LaurentPolynomial::terms() const {
  std::map<std::int64_t, std::int64_t> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      out[low_ + static_cast<std::int64_t>(i)] = coeffs_[i];
  return out;
}

std::int64_t LaurentPolynomial::eval(std::int64_t t) const {
  if (is_zero())
    return 0;
  if (t == 0 && low_ < 0)
    throw std::domain_error("evaluating a negative power at t = 0");
  if (t == 1)
    return std::accumulate(coeffs_.begin(), coeffs_.end(), std::int64_t{0});
  if (t == -1) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      s += ((low_ + static_cast<std::int64_t>(i)) % 2 == 0 ? 1 : -1) *
           coeffs_[i];
    return s;
  }
  if (low_ < 0)
    throw std::domain_error("exact evaluation with negative powers needs t = +-1");
  // Horner
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * t + *it;
  for (std::int64_t i = 0; i < low_; ++i)
    acc *= t;
  return acc;
}

LaurentPolynomial LaurentPolynomial::derivative() const {
  if (is_zero())
    return {};
  std::vector<std::int64_t> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    c[i] = (low_ + static_cast<std::int64_t>(i)) * coeffs_[i];
  return LaurentPolynomial(low_ - 1, std::move(c));
}

bool LaurentPolynomial::is_symmetric() const {
  if (is_zero())
    return true;
  if (low_ != -high_degree())
    return false;
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

LaurentPolynomial LaurentPolynomial::alexander_normalized() const {
  if (is_zero())
    throw InvariantViolation("Alexander polynomial vanished");
  const auto span = high_degree() + low_;
  if (span % 2 != 0)
    throw InvariantViolation("odd-width polynomial " + str() +
                             " cannot be made symmetric");
  auto out = shifted(-span / 2);
  const auto at_one = out.eval(1);
  if (at_one == -1)
    out = -out;
  else if (at_one != 1)
    throw InvariantViolation("polynomial " + str() + " has value " +
                             std::to_string(at_one) + " at t = 1");
  if (!out.is_symmetric())
    throw InvariantViolation("polynomial " + out.str() + " is not symmetric");
  return out;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial &o) const {
  if (is_zero())
    return o;
  if (o.is_zero())
    return *this;
  const auto low = std::min(low_, o.low_);
  const auto high = std::max(high_degree(), o.high_degree());
  std::vector<std::int64_t> c(static_cast<std::size_t>(high - low + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    c[static_cast<std::size_t>(low_ - low) + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    c[static_cast<std::size_t>(o.low_ - low) + i] += o.coeffs_[i];
  return LaurentPolynomial(low, std::move(c));
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  auto c = coeffs_;
  for (auto &v : c)
    v = -v;
  return LaurentPolynomial(low_, std::move(c));
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial &o) const {
  return *this + (-o);
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial &o) const {
  if (is_zero() || o.is_zero())
    return {};
  std::vector<std::int64_t> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * o.coeffs_[j];
  return LaurentPolynomial(low_ + o.low_, std::move(c));
}

LaurentPolynomial LaurentPolynomial::shifted(std::int64_t m) const {
  if (is_zero())
    return {};
  return LaurentPolynomial(low_ + m, coeffs_);
}

std::string LaurentPolynomial::str() const {
  if (is_zero())
    return "0";
  std::string out;
  for (auto e = high_degree(); e >= low_; --e) {
    const auto c = coeff(e);
    if (c == 0)
      continue;
    const auto mag = std::llabs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1 || e == 0)
      out += std::to_string(mag);
    if (e != 0) {
      out += "t";
      if (e != 1)
        out += "^" + std::to_string(e);
    }
  }
  return out;
}

} // namespace cosmetic
