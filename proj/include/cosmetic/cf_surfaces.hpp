#pragma once

// Essential spanning surfaces of 2-bridge knots from continued fractions.
//
// A 2-bridge knot S(p,q) is the boundary of the linear plumbing of twisted
// bands described by any expansion
//
//     x = 1/(a1 - 1/(a2 - ... - 1/an)),   |ai| >= 2,
//
// of x = q/p or x = (q-p)/p. Band i carries ai half-twists. By the
// Hatcher-Thurston classification these plumbings are the candidate
// incompressible, boundary-incompressible spanning surfaces. The surface is
// orientable iff every ai is even; exactly one such expansion exists per
// knot (the Seifert surface), and boundary slopes are measured against it.

#include "cosmetic/fraction.hpp"
#include "cosmetic/slope.hpp"
#include "cosmetic/two_bridge.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace cosmetic {

using Entries = std::vector<std::int64_t>;

/// Evaluates 1/(a1 - 1/(a2 - ... - 1/an)) exactly.
/// Throws DegenerateExpansion if an intermediate denominator vanishes and
/// std::invalid_argument on an empty sequence.
Fraction cf_value(std::span<const std::int64_t> entries);

/// A continued fraction with all |ai| >= 2 together with its value.
class CFExpansion {
public:
  /// Validates entries and evaluates them. Throws std::invalid_argument.
  explicit CFExpansion(Entries entries);

  const Entries &entries() const { return entries_; }
  const Fraction &target() const { return target_; }
  std::size_t length() const { return entries_.size(); }
  bool all_even() const;

  friend bool operator==(const CFExpansion &, const CFExpansion &) = default;

private:
  Entries entries_;
  Fraction target_;
};

/// The two fractions in (-1,1) whose expansions describe S(p,q): q/p and
/// (q-p)/p.
std::vector<Fraction> representatives(const TwoBridgeKnot &k);

/// Every expansion with |ai| >= 2 of a fraction 0 < |x| < 1, depth first,
/// trying floor(1/x) before ceil(1/x) at each level.
std::vector<CFExpansion> expansions_of(const Fraction &x);

/// Expansions of q/p followed by those of (q-p)/p.
std::vector<CFExpansion> enumerate_expansions(const TwoBridgeKnot &k);

/// The unique all-even expansion; target() tells which representative it
/// expands. Throws InvariantViolation if zero or two representatives admit one.
CFExpansion even_expansion(const TwoBridgeKnot &k);

/// 2[(n+ - n-) - (e+ - e-)], counting positive/negative entries of e and of
/// the even expansion.
Slope boundary_slope(const CFExpansion &e, const CFExpansion &even);

/// Number of boundary circles of the plumbed band surface, found by walking
/// the side arcs of every band around the plumbing squares.
int boundary_count(std::span<const std::int64_t> entries);

struct SurfaceDescriptor {
  CFExpansion expansion;
  Slope boundary_slope;
  std::int64_t euler = 0;
  bool orientable = false;
  int boundary_components = 1;
  /// Orientable genus, or the number of crosscaps when non-orientable.
  std::int64_t genus = 0;
};

SurfaceDescriptor describe(const CFExpansion &e, const CFExpansion &even);

struct SurfaceTable {
  TwoBridgeKnot knot;
  CFExpansion even;
  /// One boundary component; sorted by (genus, slope, entries).
  std::vector<SurfaceDescriptor> spanning;
  /// Descriptors with two boundary components, kept for diagnostics only.
  std::vector<SurfaceDescriptor> multi_boundary;
};

SurfaceTable surface_table(const TwoBridgeKnot &k);

std::vector<SurfaceDescriptor> spanning_surfaces(const TwoBridgeKnot &k);

} // namespace cosmetic
