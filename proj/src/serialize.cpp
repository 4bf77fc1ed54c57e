#include "cosmetic/serialize.hpp"

#include <map>

namespace cosmetic {

using nlohmann::json;

void to_json(json &j, const Slope &s) { j = s.str(); }

void to_json(json &j, const Fraction &f) {
  if (f.den == 1)
    j = f.num;
  else
    j = f.str();
}

void to_json(json &j, const TwoBridgeKnot &k) {
  j = json{{"name", k.str()}, {"p", k.p()}, {"q", k.q()}};
}

void to_json(json &j, const CFExpansion &e) { j = e.entries(); }

void to_json(json &j, const SurfaceDescriptor &d) {
  j = json{{"expansion", d.expansion.entries()},
           {"slope", d.boundary_slope},
           {"chi", d.euler},
           {"orientable", d.orientable},
           {"boundary_components", d.boundary_components},
           {"genus", d.genus}};
}

void to_json(json &j, const LaurentPolynomial &poly) {
  j = json::object();
  for (const auto &[e, c] : poly.terms())
    j[std::to_string(e)] = c;
}

void to_json(json &j, const InvariantSummary &inv) {
  j = json{{"alexander", inv.alexander},
           {"delta2", inv.delta2},
           {"det", inv.det},
           {"signature", inv.signature},
           {"tau", inv.tau}};
}

void to_json(json &j, const NiWuReport &r) {
  j = json{{"opposite", r.opposite},
           {"q_squared_minus_one", r.q_squared},
           {"tau_zero", r.tau_zero},
           {"survives", r.survives()}};
}

void to_json(json &j, const UpperBoundCertificate &c) {
  j = json{{"target", c.target},
           {"base", c.base},
           {"distance", c.distance},
           {"attachments", c.attachments},
           {"resulting_genus", c.resulting_genus}};
}

void to_json(json &j, const CaseRuling &c) {
  j = json{{"case", to_string(c.kind)},
           {"closed_genus", c.closed_genus},
           {"distance", c.distance},
           {"reason", c.reason}};
}

void to_json(json &j, const ExclusionCandidate &c) {
  j = json{{"surface", c.surface}, {"cases", c.cases}};
}

void to_json(json &j, const ExclusionCertificate &c) {
  j = json{{"target", c.target},
           {"excluded_genus_max", c.excluded_genus_max},
           {"candidates", c.candidates}};
}

void to_json(json &j, const ExclusionFailure &f) {
  j = json{{"target", f.target},
           {"excluded_genus_max", f.excluded_genus_max},
           {"reason", f.reason},
           {"candidate", f.candidate ? json(*f.candidate) : json(nullptr)}};
}

void to_json(json &j, const Verdict &v) {
  j = json{{"knot", v.knot},
           {"r1", v.r1},
           {"r2", v.r2},
           {"verdict", to_string(v.kind)},
           {"even_expansion", v.even}};
  if (v.surfaces) {
    j["method"] = "surfaces";
    j["upper_bound"] = v.surfaces->upper;
    j["exclusion"] = v.surfaces->exclusion;
  } else if (v.parity) {
    j["method"] = "parity";
    j["parity"] = json{{"even_slope", v.parity->even_slope},
                       {"odd_slope", v.parity->odd_slope}};
  } else {
    j["method"] = nullptr;
  }
  j["reasons"] = v.reasons;
}

void to_json(json &j, const KnotEntry &e) {
  j = json{{"knot", e.knot},
           {"amphicheiral", e.amphicheiral},
           {"mirror", e.mirror ? json(*e.mirror) : json(nullptr)},
           {"is_mirror_image", e.is_mirror_image}};
}

void to_json(json &j, const PairResult &r) {
  j = json{{"r1", r.r1}, {"r2", r.r2}, {"niwu", r.niwu}, {"verdict", r.verdict}};
}

void to_json(json &j, const ScanRecord &r) {
  j = json{{"entry", r.entry},
           {"invariants", r.invariants},
           {"boyer_lines_obstructs", r.boyer_lines},
           {"pairs", r.pairs}};
}

json surface_report(const SurfaceTable &t) {
  std::map<std::int64_t, int> nonorientable_by_genus, orientable_by_genus;
  for (const auto &d : t.spanning)
    ++(d.orientable ? orientable_by_genus : nonorientable_by_genus)[d.genus];
  const auto by_genus = [](const std::map<std::int64_t, int> &m) {
    json out = json::object();
    for (const auto &[g, c] : m)
      out[std::to_string(g)] = c;
    return out;
  };
  return json{{"knot", t.knot},
              {"even_expansion", t.even},
              {"surfaces", t.spanning},
              {"multi_boundary", t.multi_boundary},
              {"counts",
               {{"spanning", t.spanning.size()},
                {"nonorientable_by_genus", by_genus(nonorientable_by_genus)},
                {"orientable_by_genus", by_genus(orientable_by_genus)},
                {"multi_boundary", t.multi_boundary.size()}}}};
}

} // namespace cosmetic
