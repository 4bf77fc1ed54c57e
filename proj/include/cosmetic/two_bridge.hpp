#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cosmetic {

/// The 2-bridge knot S(p,q): p odd >= 3, 0 < q < p, gcd(p,q) = 1.
///
/// Two knots compare equal here only when (p,q) match exactly; use same_knot
/// for isotopy. Mirrors are distinct knot types for surgery purposes.
class TwoBridgeKnot {
public:
  /// Reduces q mod p into (0,p). Throws std::invalid_argument for even p,
  /// p < 3 or gcd(p,q) != 1.
  static TwoBridgeKnot make(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  /// q^{-1} mod p, in (0,p).
  std::int64_t q_inverse() const;

  std::string str() const;

  friend bool operator==(const TwoBridgeKnot &, const TwoBridgeKnot &) = default;
  friend auto operator<=>(const TwoBridgeKnot &, const TwoBridgeKnot &) = default;

private:
  TwoBridgeKnot(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}
  std::int64_t p_;
  std::int64_t q_;
};

/// Unoriented Schubert classification: same p and q' = q^{+-1} mod p.
bool same_knot(const TwoBridgeKnot &a, const TwoBridgeKnot &b);

/// S(p, p-q).
TwoBridgeKnot mirror(const TwoBridgeKnot &k);

/// Smallest q among {q, q^{-1} mod p}.
TwoBridgeKnot canonical(const TwoBridgeKnot &k);

bool is_amphicheiral(const TwoBridgeKnot &k);

struct KnotEntry {
  TwoBridgeKnot knot;
  bool amphicheiral = false;
  /// Canonical form of the mirror; empty when amphicheiral.
  std::optional<TwoBridgeKnot> mirror;
  /// True for the member of a chiral pair whose mirror was listed first.
  bool is_mirror_image = false;
};

/// One canonical representative per knot type with p <= p_max, ordered by
/// (p, q). Chiral pairs are both listed; the second one is flagged.
std::vector<KnotEntry> enumerate_knots(std::int64_t p_max);

/// Accepts "S(p,q)", "p/q" and the alias "9_27". Throws std::invalid_argument.
TwoBridgeKnot parse_knot(std::string_view text);

} // namespace cosmetic
