#include "cosmetic/two_bridge.hpp"

#include <doctest.h>

#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

using namespace cosmetic;

namespace {

std::vector<TwoBridgeKnot> all_knots(std::int64_t p_max) {
  std::vector<TwoBridgeKnot> out;
  for (std::int64_t p = 3; p <= p_max; p += 2)
    for (std::int64_t q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1)
        out.push_back(TwoBridgeKnot::make(p, q));
  return out;
}

} // namespace

TEST_CASE("knot_make") {
  const auto k = TwoBridgeKnot::make(49, 19);
  CHECK(k.p() == 49);
  CHECK(k.q() == 19);
  CHECK(TwoBridgeKnot::make(3, 4) == TwoBridgeKnot::make(3, 1));
  CHECK(TwoBridgeKnot::make(49, -30) == k);

  CHECK_THROWS_AS(TwoBridgeKnot::make(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(TwoBridgeKnot::make(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(TwoBridgeKnot::make(9, 3), std::invalid_argument);
}

TEST_CASE("same_knot") {
  CHECK(same_knot(TwoBridgeKnot::make(5, 2), TwoBridgeKnot::make(5, 3)));
  // 19 * 31 = 589 = 12 * 49 + 1
  CHECK(19 * 31 % 49 == 1);
  CHECK(same_knot(TwoBridgeKnot::make(49, 19), TwoBridgeKnot::make(49, 31)));
  CHECK_FALSE(same_knot(TwoBridgeKnot::make(49, 19), TwoBridgeKnot::make(49, 30)));
  CHECK_FALSE(same_knot(TwoBridgeKnot::make(5, 2), TwoBridgeKnot::make(7, 2)));
  CHECK(TwoBridgeKnot::make(49, 19).q_inverse() == 31);
}

TEST_CASE("mirror") {
  CHECK(mirror(TwoBridgeKnot::make(3, 1)) == TwoBridgeKnot::make(3, 2));
  CHECK(mirror(TwoBridgeKnot::make(49, 19)) == TwoBridgeKnot::make(49, 30));
  for (const auto &k : all_knots(41)) {
    CHECK(mirror(mirror(k)) == k);
    CHECK(mirror(k).p() == k.p());
  }
}

TEST_CASE("amphicheirality") {
  CHECK(is_amphicheiral(TwoBridgeKnot::make(5, 2)));
  CHECK(same_knot(TwoBridgeKnot::make(5, 2), mirror(TwoBridgeKnot::make(5, 2))));
  CHECK_FALSE(is_amphicheiral(TwoBridgeKnot::make(49, 19)));
  CHECK_FALSE(is_amphicheiral(TwoBridgeKnot::make(3, 1)));

  for (const auto &k : all_knots(60))
    CHECK(is_amphicheiral(k) == same_knot(k, mirror(k)));
}

TEST_CASE("same_knot is an equivalence relation for p <= 60") {
  for (std::int64_t p = 3; p <= 60; p += 2) {
    std::vector<TwoBridgeKnot> ks;
    for (const auto &k : all_knots(p))
      if (k.p() == p)
        ks.push_back(k);
    for (const auto &a : ks) {
      CHECK(same_knot(a, a));
      for (const auto &b : ks) {
        CHECK(same_knot(a, b) == same_knot(b, a));
        if (!same_knot(a, b))
          continue;
        for (const auto &c : ks)
          if (same_knot(b, c))
            CHECK(same_knot(a, c));
      }
    }
  }
}

TEST_CASE("enumerate_knots small cases") {
  const auto three = enumerate_knots(3);
  REQUIRE(three.size() == 2);
  CHECK(three[0].knot == TwoBridgeKnot::make(3, 1));
  CHECK_FALSE(three[0].is_mirror_image);
  CHECK(three[1].knot == TwoBridgeKnot::make(3, 2));
  CHECK(three[1].is_mirror_image);
  CHECK(*three[1].mirror == three[0].knot);

  const auto five = enumerate_knots(5);
  std::vector<TwoBridgeKnot> got;
  for (const auto &e : five)
    got.push_back(e.knot);
  CHECK(got == std::vector{TwoBridgeKnot::make(3, 1), TwoBridgeKnot::make(3, 2),
                           TwoBridgeKnot::make(5, 1), TwoBridgeKnot::make(5, 2),
                           TwoBridgeKnot::make(5, 4)});
  CHECK(five[3].amphicheiral);
  CHECK_FALSE(five[3].mirror.has_value());
  CHECK(five[4].is_mirror_image);
  CHECK(*five[4].mirror == TwoBridgeKnot::make(5, 1));
}

TEST_CASE("enumerate_knots matches a brute-force dedupe") {
  for (std::int64_t p_max : {3, 11, 25, 49}) {
    // oracle: greedy classes over all (p, q), keep the first member seen
    std::vector<TwoBridgeKnot> classes;
    for (const auto &k : all_knots(p_max)) {
      bool seen = false;
      for (const auto &c : classes)
        seen = seen || same_knot(c, k);
      if (!seen)
        classes.push_back(k);
    }
    const auto listed = enumerate_knots(p_max);
    REQUIRE(listed.size() == classes.size());
    for (std::size_t i = 0; i < listed.size(); ++i)
      CHECK(listed[i].knot == classes[i]);
  }
  bool has_927 = false;
  for (const auto &e : enumerate_knots(49))
    has_927 = has_927 || e.knot == TwoBridgeKnot::make(49, 19);
  CHECK(has_927);
}

TEST_CASE("parse_knot") {
  CHECK(parse_knot("S(49,19)") == TwoBridgeKnot::make(49, 19));
  CHECK(parse_knot("S(49, -30)") == TwoBridgeKnot::make(49, 19));
  CHECK(parse_knot("49/19") == TwoBridgeKnot::make(49, 19));
  CHECK(parse_knot("9_27") == TwoBridgeKnot::make(49, 19));
  CHECK(parse_knot("9_27").str() == "S(49,19)");
  CHECK_THROWS_AS(parse_knot("S(4,1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_knot("S(49,19"), std::invalid_argument);
  CHECK_THROWS_AS(parse_knot("trefoil"), std::invalid_argument);
}
