#pragma once

#include "cosmetic/invariants.hpp"
#include "cosmetic/obstruction.hpp"
#include "cosmetic/two_bridge.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace cosmetic {

struct ScanOptions {
  std::int64_t max_p = 49;
  /// Candidate slopes +-a/b with a even, 2 <= a <= max_slope_num.
  std::int64_t max_slope_num = 10;
  /// 1 <= b <= max_slope_den.
  std::int64_t max_slope_den = 10;
};

struct PairResult {
  Slope r1;
  Slope r2;
  NiWuReport niwu;
  Verdict verdict;
};

/// Pairs only appear when Boyer-Lines does not obstruct and all three Ni-Wu
/// conditions hold.
struct ScanRecord {
  KnotEntry entry;
  InvariantSummary invariants;
  bool boyer_lines = false;
  std::vector<PairResult> pairs;
};

/// (a/b, -a/b) with a even, q^2 = -1 mod a, gcd(a, b) = 1, ordered by (a, b).
std::vector<std::pair<Slope, Slope>> candidate_pairs(const ScanOptions &opts);

ScanRecord scan_knot(const KnotEntry &entry, const ScanOptions &opts);

/// Reference implementation, one knot at a time.
std::vector<ScanRecord> scan_serial(const ScanOptions &opts);

/// OpenMP over knots; output identical to scan_serial.
std::vector<ScanRecord> scan_parallel(const ScanOptions &opts);

} // namespace cosmetic
