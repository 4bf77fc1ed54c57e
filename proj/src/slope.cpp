#include "cosmetic/slope.hpp"

#include "cosmetic/parse_util.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace cosmetic {

Slope Slope::make(std::int64_t num, std::int64_t den) {
  if (num == 0 && den == 0)
    throw std::invalid_argument("slope 0/0 is ill-formed");
  if (den == 0)
    return Slope(1, 0);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return Slope(num / g, den / g);
}

std::string Slope::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool operator<(const Slope &a, const Slope &b) {
  if (a.is_meridian() || b.is_meridian())
    return !a.is_meridian() && b.is_meridian();
  // dens are positive, so cross-multiplication preserves order
  return static_cast<__int128>(a.num()) * b.den() <
         static_cast<__int128>(b.num()) * a.den();
}

std::int64_t distance(const Slope &a, const Slope &b) {
  return std::llabs(a.num() * b.den() - a.den() * b.num());
}

Slope parse_slope(std::string_view text) {
  const auto trimmed = detail::trim(text);
  const auto slash = trimmed.find('/');
  if (slash == std::string_view::npos)
    return Slope::make(detail::parse_int(trimmed, "slope"), 1);
  const auto num = detail::parse_int(trimmed.substr(0, slash), "slope");
  const auto den = detail::parse_int(trimmed.substr(slash + 1), "slope");
  return Slope::make(num, den);
}

} // namespace cosmetic
