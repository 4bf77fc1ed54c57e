#include "cosmetic/scan.hpp"
#include "cosmetic/serialize.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace cosmetic;

TEST_CASE("candidate_pairs") {
  const auto pairs = candidate_pairs(ScanOptions{});
  auto has = [&](std::int64_t a, std::int64_t b) {
    return std::any_of(pairs.begin(), pairs.end(), [&](const auto &pr) {
      return pr.first == Slope::make(a, b) && pr.second == Slope::make(-a, b);
    });
  };
  CHECK(has(10, 3));
  CHECK(has(10, 7));
  CHECK(has(2, 1));
  CHECK(has(2, 9));
  CHECK_FALSE(has(10, 1));
  CHECK_FALSE(has(4, 1)); // no square root of -1 mod 4
  CHECK_FALSE(has(2, 2));

  for (const auto &[r1, r2] : pairs) {
    CHECK(r1 == -r2);
    CHECK(r1.numerator_is_even());
    const auto a = r1.num(), b = r1.den();
    CHECK(std::gcd(a, b) == 1);
    CHECK((b * b + 1) % a == 0);
    CHECK(a <= 10);
    CHECK(b <= 10);
  }
  // a = 2: every odd b
  CHECK(std::count_if(pairs.begin(), pairs.end(),
                      [](const auto &pr) { return pr.first.num() == 2; }) == 5);
}

TEST_CASE("serial and parallel scans agree") {
  const ScanOptions opts{75, 10, 10};
  const auto serial = scan_serial(opts);
  const auto parallel = scan_parallel(opts);
  REQUIRE(serial.size() == parallel.size());
  CHECK(nlohmann::json(serial).dump() == nlohmann::json(parallel).dump());
}

TEST_CASE("scan records are filtered consistently") {
  const auto records = scan_serial(ScanOptions{});
  bool found = false;
  for (const auto &r : records) {
    CHECK(r.boyer_lines == (r.invariants.delta2 != 0));
    if (r.boyer_lines)
      CHECK(r.pairs.empty());
    for (const auto &pr : r.pairs) {
      CHECK(pr.niwu.opposite);
      CHECK(pr.niwu.q_squared);
      CHECK(pr.niwu.tau_zero);
      if (r.entry.knot == TwoBridgeKnot::make(49, 19) && pr.r1 == Slope::make(10, 3))
        found = pr.verdict.kind == VerdictKind::Distinguished;
    }
  }
  CHECK(found);
}

TEST_CASE("scan covers each knot once") {
  const auto records = scan_parallel(ScanOptions{25, 4, 4});
  const auto knots = enumerate_knots(25);
  REQUIRE(records.size() == knots.size());
  for (std::size_t i = 0; i < knots.size(); ++i)
    CHECK(records[i].entry.knot == knots[i].knot);
}
