#include "cosmetic/slope.hpp"

#include <doctest.h>

#include <cstdlib>
#include <stdexcept>
#include <vector>

using cosmetic::distance;
using cosmetic::parse_slope;
using cosmetic::Slope;

TEST_CASE("slope_make normalizes") {
  CHECK(Slope::make(-20, 6) == Slope::make(-10, 3));
  CHECK(Slope::make(-20, 6).num() == -10);
  CHECK(Slope::make(-20, 6).den() == 3);

  const auto s = Slope::make(3, -1);
  CHECK(s.num() == -3);
  CHECK(s.den() == 1);

  const auto m = Slope::make(5, 0);
  CHECK(m.num() == 1);
  CHECK(m.den() == 0);
  CHECK(m.is_meridian());
  CHECK(Slope::make(-7, 0) == Slope::meridian());

  const auto z = Slope::make(0, -4);
  CHECK(z.num() == 0);
  CHECK(z.den() == 1);
}

TEST_CASE("slope_make rejects 0/0") {
  CHECK_THROWS_AS(Slope::make(0, 0), std::invalid_argument);
}

TEST_CASE("distance examples") {
  CHECK(distance(Slope::integer(-4), Slope::make(-10, 3)) == 2);
  CHECK(distance(Slope::meridian(), Slope::make(3, 5)) == 5);
  CHECK(distance(Slope::make(10, 3), Slope::make(-10, 3)) == 60);
  const auto r = Slope::make(7, 2);
  CHECK(distance(r, r) == 0);
}

TEST_CASE("numerator parity") {
  CHECK(Slope::make(10, 3).numerator_is_even());
  CHECK_FALSE(Slope::make(7, 2).numerator_is_even());
  CHECK(Slope::integer(0).numerator_is_even());
}

TEST_CASE("distance properties over |p|,|q| <= 30") {
  std::vector<Slope> slopes;
  for (int p = -30; p <= 30; ++p)
    for (int q = 0; q <= 30; ++q)
      if ((p != 0 || q != 0))
        slopes.push_back(Slope::make(p, q));

  for (std::size_t i = 0; i < slopes.size(); i += 7) {
    const auto &a = slopes[i];
    // normalization is idempotent
    CHECK(Slope::make(a.num(), a.den()) == a);
    if (!a.is_meridian()) {
      CHECK(distance(a, -a) == 2 * std::llabs(a.num()) * a.den());
    }
    for (std::size_t j = 0; j < slopes.size(); j += 5) {
      const auto &b = slopes[j];
      const auto d = distance(a, b);
      CHECK(d == distance(b, a));
      CHECK((d == 0) == (a == b));
    }
  }
}

TEST_CASE("parse_slope") {
  CHECK(parse_slope("10/3") == Slope::make(10, 3));
  CHECK(parse_slope("-10/3") == Slope::make(-10, 3));
  CHECK(parse_slope("-4") == Slope::integer(-4));
  CHECK(parse_slope("1/0").is_meridian());
  CHECK(parse_slope("6/-4") == Slope::make(-3, 2));
  CHECK(parse_slope("10/3").str() == "10/3");
  CHECK(parse_slope("-4").str() == "-4/1");
  CHECK_THROWS_AS(parse_slope("0/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_slope("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_slope("3/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_slope(""), std::invalid_argument);
}

TEST_CASE("slope ordering") {
  CHECK(Slope::make(-10, 3) < Slope::integer(-3));
  CHECK(Slope::integer(5) < Slope::meridian());
  CHECK_FALSE(Slope::meridian() < Slope::integer(5));
}
