#pragma once

// Stand-alone verification of verdict certificates.
//
// Works from the JSON payload alone and shares no code with the surface
// enumeration or the obstruction logic: it re-derives the candidate surface
// list by brute force, recomputes every slope, Euler characteristic, genus
// and distance, and checks each ruling.

#include <json.hpp>

#include <string>
#include <vector>

namespace cosmetic {

struct CheckReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

CheckReport check_certificate(const nlohmann::json &verdict);

} // namespace cosmetic
