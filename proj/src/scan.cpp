#include "cosmetic/scan.hpp"

#include <exception>
#include <numeric>
#include <optional>

namespace cosmetic {

std::vector<std::pair<Slope, Slope>> candidate_pairs(const ScanOptions &opts) {
  std::vector<std::pair<Slope, Slope>> out;
  for (std::int64_t a = 2; a <= opts.max_slope_num; a += 2)
    for (std::int64_t b = 1; b <= opts.max_slope_den; ++b)
      if (std::gcd(a, b) == 1 && (b * b + 1) % a == 0)
        out.emplace_back(Slope::make(a, b), Slope::make(-a, b));
  return out;
}

ScanRecord scan_knot(const KnotEntry &entry, const ScanOptions &opts) {
  ScanRecord rec{entry, compute_invariants(entry.knot), false, {}};
  rec.boyer_lines = boyer_lines_obstructs(rec.invariants);
  if (rec.boyer_lines)
    return rec;

  std::optional<SurfaceTable> table;
  for (const auto &[r1, r2] : candidate_pairs(opts)) {
    const auto niwu = niwu_filter(rec.invariants, r1, r2);
    if (!niwu.survives())
      continue;
    if (!table)
      table = surface_table(entry.knot);
    rec.pairs.push_back({r1, r2, niwu, distinguish(*table, r1, r2)});
  }
  return rec;
}

std::vector<ScanRecord> scan_serial(const ScanOptions &opts) {
  std::vector<ScanRecord> out;
  for (const auto &entry : enumerate_knots(opts.max_p))
    out.push_back(scan_knot(entry, opts));
  return out;
}

std::vector<ScanRecord> scan_parallel(const ScanOptions &opts) {
  const auto knots = enumerate_knots(opts.max_p);
  std::vector<std::optional<ScanRecord>> slots(knots.size());
  std::exception_ptr error;
  const auto n = static_cast<std::int64_t>(knots.size());

#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      slots[static_cast<std::size_t>(i)] =
          scan_knot(knots[static_cast<std::size_t>(i)], opts);
    } catch (...) {
#pragma omp critical(cosmetic_scan_error)
      if (!error)
        error = std::current_exception();
    }
  }
  if (error)
    std::rethrow_exception(error);

  std::vector<ScanRecord> out;
  out.reserve(slots.size());
  for (auto &s : slots)
    out.push_back(std::move(*s));
  return out;
}

} // namespace cosmetic
