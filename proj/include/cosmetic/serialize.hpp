#pragma once

// JSON forms of the library's values. Payloads carry every arithmetic fact
// (slopes, distances, genera) explicitly so they can be checked without
// this library; see checker.hpp.

#include "cosmetic/cf_surfaces.hpp"
#include "cosmetic/invariants.hpp"
#include "cosmetic/obstruction.hpp"
#include "cosmetic/scan.hpp"

#include <json.hpp>

namespace cosmetic {

void to_json(nlohmann::json &j, const Slope &s);
void to_json(nlohmann::json &j, const Fraction &f);
void to_json(nlohmann::json &j, const TwoBridgeKnot &k);
void to_json(nlohmann::json &j, const CFExpansion &e);
void to_json(nlohmann::json &j, const SurfaceDescriptor &d);
void to_json(nlohmann::json &j, const LaurentPolynomial &poly);
void to_json(nlohmann::json &j, const InvariantSummary &inv);
void to_json(nlohmann::json &j, const NiWuReport &r);
void to_json(nlohmann::json &j, const UpperBoundCertificate &c);
void to_json(nlohmann::json &j, const CaseRuling &c);
void to_json(nlohmann::json &j, const ExclusionCandidate &c);
void to_json(nlohmann::json &j, const ExclusionCertificate &c);
void to_json(nlohmann::json &j, const ExclusionFailure &f);
void to_json(nlohmann::json &j, const Verdict &v);
void to_json(nlohmann::json &j, const KnotEntry &e);
void to_json(nlohmann::json &j, const PairResult &r);
void to_json(nlohmann::json &j, const ScanRecord &r);

/// Descriptor listing plus counts by genus and the multi-boundary diagnostics.
nlohmann::json surface_report(const SurfaceTable &t);

} // namespace cosmetic
