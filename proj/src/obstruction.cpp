#include "cosmetic/obstruction.hpp"

#include <stdexcept>

namespace cosmetic {

namespace {

void require_surgery_slope(const Slope &s) {
  if (s.is_meridian())
    throw std::invalid_argument("the meridian 1/0 is a trivial surgery slope");
}

void require_even(const Slope &s) {
  require_surgery_slope(s);
  if (!s.numerator_is_even())
    throw std::invalid_argument("slope " + s.str() +
                                " has odd numerator; no closed "
                                "non-orientable surface exists");
}

void require_pair(const Slope &r1, const Slope &r2) {
  require_surgery_slope(r1);
  require_surgery_slope(r2);
  if (r1 == r2)
    throw std::invalid_argument("slopes must differ, both are " + r1.str());
}

} // namespace

bool admits_closed_nonorientable(const Slope &s) {
  require_surgery_slope(s);
  return s.numerator_is_even();
}

std::optional<UpperBoundCertificate> upper_bound_genus(const SurfaceTable &t,
                                                       const Slope &s) {
  require_even(s);
  std::optional<UpperBoundCertificate> best;
  for (const auto &f : t.spanning) {
    if (f.orientable)
      continue;
    const auto d = distance(f.boundary_slope, s);
    if (d != 0 && d != 2)
      continue;
    const auto genus = f.genus + d / 2;
    // spanning is sorted, so the first minimum is the canonical one
    if (!best || genus < best->resulting_genus)
      best = UpperBoundCertificate{s, f, d, static_cast<int>(d / 2), genus};
  }
  return best;
}

std::optional<UpperBoundCertificate> upper_bound_genus(const TwoBridgeKnot &k,
                                                       const Slope &s) {
  return upper_bound_genus(surface_table(k), s);
}

const char *to_string(CapCase c) {
  switch (c) {
  case CapCase::Disk:
    return "disk";
  case CapCase::Moebius:
    return "moebius";
  case CapCase::OrientableMoebius:
    return "orientable_moebius";
  }
  return "?";
}

const char *to_string(VerdictKind k) {
  return k == VerdictKind::Distinguished ? "DISTINGUISHED" : "INCONCLUSIVE";
}

ExclusionResult exclusion_bound(const SurfaceTable &t, const Slope &s,
                                std::int64_t G) {
  require_even(s);
  if (G < 1)
    throw std::invalid_argument("exclusion genus bound must be >= 1");

  const auto fail = [&](std::string why, const SurfaceDescriptor &f) {
    return ExclusionFailure{s, G, std::move(why), f};
  };

  for (const auto &f : t.multi_boundary)
    if (f.genus <= G)
      return fail("inconclusive: multi-boundary candidate", f);

  ExclusionCertificate cert{s, G, {}};
  for (const auto &f : t.spanning) {
    ExclusionCandidate cand{f, {}};
    const auto d = distance(f.boundary_slope, s);
    if (!f.orientable) {
      if (f.genus <= G) {
        if (f.boundary_slope == s)
          return fail("disk case: spanning surface has the target slope", f);
        cand.cases.push_back(
            {CapCase::Disk, f.genus, d,
             s.is_integral() ? "slope " + f.boundary_slope.str() +
                                   " differs from target"
                             : "target slope is not integral"});
      }
      if (f.genus <= G - 1) {
        if (d == 2)
          return fail("moebius case: spanning surface at distance 2", f);
        cand.cases.push_back({CapCase::Moebius, f.genus + 1, d,
                              "distance " + std::to_string(d) + " != 2"});
      }
    } else if (f.genus <= G - 1) {
      if (d == 2)
        return fail("orientable spanning surface at distance 2 is not "
                    "covered by the case analysis",
                    f);
      // capping with a Moebius band keeps chi, so the closed genus is 2 - chi
      cand.cases.push_back({CapCase::OrientableMoebius, 2 - f.euler, d,
                            "distance " + std::to_string(d) + " != 2"});
    }
    if (!cand.cases.empty())
      cert.candidates.push_back(std::move(cand));
  }
  return cert;
}

ExclusionResult exclusion_bound(const TwoBridgeKnot &k, const Slope &s,
                                std::int64_t G) {
  return exclusion_bound(surface_table(k), s, G);
}

Verdict distinguish(const SurfaceTable &t, const Slope &r1, const Slope &r2) {
  require_pair(r1, r2);
  Verdict v{VerdictKind::Inconclusive, t.knot, r1, r2, t.even, {}, {}, {}};

  const bool even1 = r1.numerator_is_even();
  const bool even2 = r2.numerator_is_even();
  if (!even1 && !even2) {
    v.reasons.push_back("method inapplicable: both numerators odd");
    return v;
  }
  if (even1 != even2) {
    v.kind = VerdictKind::Distinguished;
    v.parity = even1 ? ParityEvidence{r1, r2} : ParityEvidence{r2, r1};
    return v;
  }

  // Try both directions, then pick by (genus, bounded slope) so the choice
  // does not depend on argument order.
  std::optional<SurfaceEvidence> best;
  const auto attempt = [&](const Slope &bounded, const Slope &excluded) {
    const auto ub = upper_bound_genus(t, bounded);
    if (!ub) {
      v.reasons.push_back("no non-orientable spanning surface within distance "
                          "2 of " + bounded.str());
      return;
    }
    auto ex = exclusion_bound(t, excluded, ub->resulting_genus);
    if (auto *failure = std::get_if<ExclusionFailure>(&ex)) {
      v.reasons.push_back("cannot exclude genus <= " +
                          std::to_string(ub->resulting_genus) + " in K(" +
                          excluded.str() + "): " + failure->reason +
                          (failure->candidate
                               ? " (slope " +
                                     failure->candidate->boundary_slope.str() +
                                     ", genus " +
                                     std::to_string(failure->candidate->genus) +
                                     ")"
                               : ""));
      return;
    }
    SurfaceEvidence ev{*ub, std::get<ExclusionCertificate>(std::move(ex))};
    if (!best || ev.upper.resulting_genus < best->upper.resulting_genus ||
        (ev.upper.resulting_genus == best->upper.resulting_genus &&
         ev.upper.target < best->upper.target))
      best = std::move(ev);
  };
  attempt(r2, r1);
  attempt(r1, r2);

  if (best) {
    v.kind = VerdictKind::Distinguished;
    v.surfaces = std::move(best);
    v.reasons.clear();
  }
  return v;
}

Verdict distinguish(const TwoBridgeKnot &k, const Slope &r1, const Slope &r2) {
  return distinguish(surface_table(k), r1, r2);
}

} // namespace cosmetic
