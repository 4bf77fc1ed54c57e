#include "cosmetic/invariants.hpp"

#include <doctest.h>

#include <cstdlib>
#include <numeric>

using namespace cosmetic;

namespace {

std::vector<TwoBridgeKnot> knots_up_to(std::int64_t p_max) {
  std::vector<TwoBridgeKnot> out;
  for (std::int64_t p = 3; p <= p_max; p += 2)
    for (std::int64_t q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1)
        out.push_back(TwoBridgeKnot::make(p, q));
  return out;
}

LaurentPolynomial poly(std::map<std::int64_t, std::int64_t> m) {
  return LaurentPolynomial::from_map(m);
}

} // namespace

TEST_CASE("seifert_matrix") {
  const auto t = seifert_matrix(even_expansion(TwoBridgeKnot::make(3, 1)));
  CHECK(t.matrix == IntMatrix{{-1, 1}, {0, -1}});
  const auto f = seifert_matrix(even_expansion(TwoBridgeKnot::make(5, 2)));
  CHECK(f.matrix == IntMatrix{{1, 1}, {0, -1}});
  CHECK(seifert_matrix(CFExpansion({2, 2})).matrix == IntMatrix{{1, 1}, {0, 1}});
  CHECK_THROWS_AS(seifert_matrix(CFExpansion({3})), std::invalid_argument);
}

TEST_CASE("alexander polynomials of small knots") {
  CHECK(alexander(TwoBridgeKnot::make(3, 1)) == poly({{-1, 1}, {0, -1}, {1, 1}}));
  CHECK(alexander(TwoBridgeKnot::make(5, 2)) == poly({{-1, -1}, {0, 3}, {1, -1}}));
  CHECK(alexander(TwoBridgeKnot::make(5, 2)).str() == "-t + 3 - t^-1");
}

TEST_CASE("S(49,19) invariants") {
  const auto k = TwoBridgeKnot::make(49, 19);
  const auto d = alexander(k);
  CHECK(d == poly({{3, -1}, {2, 5}, {1, -11}, {0, 15},
                   {-1, -11}, {-2, 5}, {-3, -1}}));
  CHECK(d.str() == "-t^3 + 5t^2 - 11t + 15 - 11t^-1 + 5t^-2 - t^-3");
  CHECK(alexander_fox_oracle(k) == d);
  CHECK(delta2_at_1(k) == 0);
  CHECK(determinant(k) == 49);
  CHECK(signature(k) == 0);
  CHECK(tau_alternating(k) == Fraction::make(0, 1));
}

TEST_CASE("delta2_at_1 values") {
  CHECK(delta2_at_1(TwoBridgeKnot::make(3, 1)) == 2);
  CHECK(delta2_at_1(TwoBridgeKnot::make(5, 2)) == -2);
  // sum of c_k k (k - 1) on a hand-made polynomial
  CHECK(delta2_at_1(poly({{2, 1}, {0, -1}, {-2, 1}})) == 2 + 6);
}

TEST_CASE("trefoil signature and tau") {
  const auto k = TwoBridgeKnot::make(3, 1);
  CHECK(signature(k) == -2);
  CHECK(tau_alternating(k) == Fraction::make(1, 1));
  CHECK(signature(mirror(k)) == 2);
  CHECK(signature(TwoBridgeKnot::make(5, 2)) == 0);
}

TEST_CASE("Fox presentation agrees with the Seifert form for p <= 60") {
  for (const auto &k : knots_up_to(60))
    CHECK_MESSAGE(alexander_fox_oracle(k) == alexander(k), k.str());
}

TEST_CASE("classical invariant properties for p <= 200") {
  for (const auto &k : knots_up_to(200)) {
    const auto d = alexander(k);
    CHECK(d.eval(1) == 1);
    CHECK(d.is_symmetric());
    CHECK(std::llabs(d.eval(-1)) == k.p());
    CHECK(determinant(k) == k.p());

    const auto form = seifert_matrix(even_expansion(k));
    CHECK(std::llabs(symmetrized_determinant(form)) == k.p());
    // normalization is only a unit multiple of det(V - tV^T)
    CHECK(seifert_alexander(form).alexander_normalized() == d);

    const auto sigma = signature(k);
    CHECK(sigma % 2 == 0);
    CHECK(std::llabs(sigma) <= static_cast<std::int64_t>(form.size()));
    CHECK(signature(mirror(k)) == -sigma);
    CHECK(tau_alternating(k) == Fraction::make(-sigma, 2));

    const auto rep = TwoBridgeKnot::make(k.p(), k.q_inverse());
    CHECK(alexander(rep) == d);
    CHECK(signature(rep) == sigma);
    // Alexander polynomial is mirror-blind
    CHECK(alexander(mirror(k)) == d);
  }
}

TEST_CASE("niwu_filter") {
  const auto k = TwoBridgeKnot::make(49, 19);
  const auto ten_thirds = Slope::make(10, 3);
  auto r = niwu_filter(k, ten_thirds, -ten_thirds);
  CHECK(r.opposite);
  CHECK(r.q_squared); // 9 = -1 mod 10
  CHECK(r.tau_zero);
  CHECK(r.survives());

  r = niwu_filter(k, Slope::make(10, 7), Slope::make(-10, 7)); // 49 = -1 mod 10
  CHECK(r.survives());

  r = niwu_filter(k, Slope::make(10, 1), Slope::make(-10, 1));
  CHECK_FALSE(r.q_squared);
  CHECK_FALSE(r.survives());

  r = niwu_filter(k, Slope::make(10, 3), Slope::make(-10, 7));
  CHECK_FALSE(r.opposite);

  r = niwu_filter(TwoBridgeKnot::make(3, 1), Slope::make(2, 1), Slope::make(-2, 1));
  CHECK(r.q_squared);
  CHECK_FALSE(r.tau_zero);

  CHECK_THROWS_AS(niwu_filter(k, ten_thirds, ten_thirds), std::invalid_argument);
  CHECK_THROWS_AS(niwu_filter(k, Slope::meridian(), ten_thirds),
                  std::invalid_argument);
}

TEST_CASE("boyer_lines_obstructs") {
  CHECK_FALSE(boyer_lines_obstructs(TwoBridgeKnot::make(49, 19)));
  CHECK(boyer_lines_obstructs(TwoBridgeKnot::make(3, 1)));
  CHECK(boyer_lines_obstructs(TwoBridgeKnot::make(5, 2)));
  const auto inv = compute_invariants(TwoBridgeKnot::make(49, 19));
  CHECK_FALSE(boyer_lines_obstructs(inv));
  CHECK(inv.det == 49);
}
