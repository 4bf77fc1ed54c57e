#include "cosmetic/two_bridge.hpp"

#include "cosmetic/parse_util.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace cosmetic {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const auto r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  // extended Euclid; caller guarantees gcd(a, m) = 1
  std::int64_t r0 = m, r1 = mod(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const auto quot = r0 / r1;
    r0 = std::exchange(r1, r0 - quot * r1);
    s0 = std::exchange(s1, s0 - quot * s1);
  }
  return mod(s0, m);
}

struct Alias {
  std::string_view name;
  std::int64_t p, q;
};

// Rolfsen-table names. Only 9_27 is needed; chirality matches the convention
// in which its surface table has genus-4 slopes {-8, -4, 0}.
constexpr std::array kAliases{Alias{"9_27", 49, 19}};

} // namespace

TwoBridgeKnot TwoBridgeKnot::make(std::int64_t p, std::int64_t q) {
  if (p < 3)
    throw std::invalid_argument("S(p,q) needs p >= 3, got p = " +
                                std::to_string(p));
  if (p % 2 == 0)
    throw std::invalid_argument("S(" + std::to_string(p) + "," +
                                std::to_string(q) +
                                ") has even p: a 2-bridge link, not a knot");
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("S(" + std::to_string(p) + "," +
                                std::to_string(q) + "): p and q not coprime");
  return TwoBridgeKnot(p, mod(q, p));
}

std::int64_t TwoBridgeKnot::q_inverse() const { return inverse_mod(q_, p_); }

std::string TwoBridgeKnot::str() const {
  return "S(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

bool same_knot(const TwoBridgeKnot &a, const TwoBridgeKnot &b) {
  if (a.p() != b.p())
    return false;
  return a.q() == b.q() || mod(a.q() * b.q(), a.p()) == 1;
}

TwoBridgeKnot mirror(const TwoBridgeKnot &k) {
  return TwoBridgeKnot::make(k.p(), k.p() - k.q());
}

TwoBridgeKnot canonical(const TwoBridgeKnot &k) {
  return TwoBridgeKnot::make(k.p(), std::min(k.q(), k.q_inverse()));
}

bool is_amphicheiral(const TwoBridgeKnot &k) {
  return mod(k.q() * k.q() + 1, k.p()) == 0;
}

std::vector<KnotEntry> enumerate_knots(std::int64_t p_max) {
  std::vector<KnotEntry> out;
  for (std::int64_t p = 3; p <= p_max; p += 2) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1)
        continue;
      const auto k = TwoBridgeKnot::make(p, q);
      if (canonical(k) != k)
        continue;
      KnotEntry e{k, false, std::nullopt, false};
      e.amphicheiral = is_amphicheiral(k);
      if (!e.amphicheiral) {
        e.mirror = canonical(mirror(k));
        e.is_mirror_image = e.mirror->q() < k.q();
      }
      out.push_back(e);
    }
  }
  return out;
}

TwoBridgeKnot parse_knot(std::string_view text) {
  auto s = detail::trim(text);
  for (const auto &alias : kAliases)
    if (s == alias.name)
      return TwoBridgeKnot::make(alias.p, alias.q);

  if (s.size() >= 2 && (s.front() == 'S' || s.front() == 's') && s[1] == '(') {
    if (s.back() != ')')
      throw std::invalid_argument("malformed knot '" + std::string(text) + "'");
    s = s.substr(2, s.size() - 3);
    const auto comma = s.find(',');
    if (comma == std::string_view::npos)
      throw std::invalid_argument("malformed knot '" + std::string(text) + "'");
    return TwoBridgeKnot::make(detail::parse_int(s.substr(0, comma), "knot"),
                               detail::parse_int(s.substr(comma + 1), "knot"));
  }

  const auto slash = s.find('/');
  if (slash == std::string_view::npos)
    throw std::invalid_argument("unrecognized knot '" + std::string(text) +
                                "' (expected S(p,q), p/q or 9_27)");
  return TwoBridgeKnot::make(detail::parse_int(s.substr(0, slash), "knot"),
                             detail::parse_int(s.substr(slash + 1), "knot"));
}

} // namespace cosmetic
