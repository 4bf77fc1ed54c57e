#pragma once

// Closed non-orientable surfaces in surgered 2-bridge knot exteriors.
//
// For K(r) with r = a/b and a even, K(r) contains a closed non-orientable
// surface; for a odd it contains none. When both slopes of a pair are even
// we compare the minimal genus of such surfaces:
//
//  - upper bound: a non-orientable spanning surface F with slope s caps off
//    in K(r) with a disk if s = r (genus g(F)), or with a Moebius band in the
//    attached solid torus if distance(s, r) = 2 (genus g(F) + 1);
//  - exclusion: an incompressible closed surface of genus <= G in K(r) meets
//    the exterior in an essential spanning surface F, and the solid torus in
//    a disk (slope of F equals r) or a Moebius band (distance(slope, r) = 2,
//    g(F) one less). Ruling out every candidate F proves no such surface.

#include "cosmetic/cf_surfaces.hpp"
#include "cosmetic/slope.hpp"
#include "cosmetic/two_bridge.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cosmetic {

/// K(s) contains a closed non-orientable surface iff the numerator of s is
/// even. Throws std::invalid_argument for the meridian.
bool admits_closed_nonorientable(const Slope &s);

struct UpperBoundCertificate {
  Slope target;
  SurfaceDescriptor base;
  std::int64_t distance = 0; // 0 or 2
  int attachments = 0;       // distance / 2
  std::int64_t resulting_genus = 0;
};

/// Smallest g(F) + distance/2 over non-orientable spanning surfaces F with
/// distance(slope(F), s) in {0, 2}. Throws std::invalid_argument if s is the
/// meridian or has odd numerator.
std::optional<UpperBoundCertificate> upper_bound_genus(const SurfaceTable &t,
                                                       const Slope &s);
std::optional<UpperBoundCertificate> upper_bound_genus(const TwoBridgeKnot &k,
                                                       const Slope &s);

enum class CapCase {
  Disk,               // closed genus = g(F), needs slope(F) == target
  Moebius,            // closed genus = g(F) + 1, needs distance == 2
  OrientableMoebius,  // orientable F plus a Moebius band, needs distance == 2
};

const char *to_string(CapCase c);

struct CaseRuling {
  CapCase kind = CapCase::Disk;
  std::int64_t closed_genus = 0;
  std::int64_t distance = 0;
  std::string reason;
};

struct ExclusionCandidate {
  SurfaceDescriptor surface;
  std::vector<CaseRuling> cases;
};

struct ExclusionCertificate {
  Slope target;
  std::int64_t excluded_genus_max = 0;
  std::vector<ExclusionCandidate> candidates;
};

struct ExclusionFailure {
  Slope target;
  std::int64_t excluded_genus_max = 0;
  std::string reason;
  std::optional<SurfaceDescriptor> candidate;
};

using ExclusionResult = std::variant<ExclusionCertificate, ExclusionFailure>;

/// Certifies that K(s) has no closed non-orientable surface of genus <= G,
/// or reports the first candidate it cannot rule out.
ExclusionResult exclusion_bound(const SurfaceTable &t, const Slope &s,
                                std::int64_t G);
ExclusionResult exclusion_bound(const TwoBridgeKnot &k, const Slope &s,
                                std::int64_t G);

enum class VerdictKind { Distinguished, Inconclusive };

const char *to_string(VerdictKind k);

/// K(bounded) has a genus-G surface, K(excluded) has none of genus <= G.
struct SurfaceEvidence {
  UpperBoundCertificate upper;
  ExclusionCertificate exclusion;
};

/// One slope has even numerator, the other odd.
struct ParityEvidence {
  Slope even_slope;
  Slope odd_slope;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  TwoBridgeKnot knot;
  Slope r1;
  Slope r2;
  CFExpansion even;
  std::optional<SurfaceEvidence> surfaces;
  std::optional<ParityEvidence> parity;
  std::vector<std::string> reasons;
};

/// Throws std::invalid_argument if r1 == r2 or either is the meridian.
Verdict distinguish(const SurfaceTable &t, const Slope &r1, const Slope &r2);
Verdict distinguish(const TwoBridgeKnot &k, const Slope &r1, const Slope &r2);

} // namespace cosmetic
