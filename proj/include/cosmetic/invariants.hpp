#pragma once

#include "cosmetic/cf_surfaces.hpp"
#include "cosmetic/fraction.hpp"
#include "cosmetic/laurent.hpp"
#include "cosmetic/slope.hpp"
#include "cosmetic/two_bridge.hpp"

#include <cstdint>
#include <vector>

namespace cosmetic {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Seifert matrix of the plumbed Seifert surface.
struct SeifertForm {
  IntMatrix matrix;
  std::size_t size() const { return matrix.size(); }
};

/// Chain-plumbing form for an all-even expansion [2c1, ..., 2cn]:
/// V[i][i] = ci, V[i][i+1] = 1, zero elsewhere. Throws std::invalid_argument
/// on odd entries.
SeifertForm seifert_matrix(const CFExpansion &even);

/// det(V - t V^T), unnormalized. V must be tridiagonal.
LaurentPolynomial seifert_alexander(const SeifertForm &v);

/// det(V + V^T).
std::int64_t symmetrized_determinant(const SeifertForm &v);

/// Signature of V + V^T. V must be tridiagonal.
std::int64_t signature(const SeifertForm &v);

/// Alexander polynomial from the Seifert form, normalized symmetric with
/// value 1 at t = 1.
LaurentPolynomial alexander(const TwoBridgeKnot &k);

/// Independent route: Fox derivative of the Schubert presentation
/// <a, b | a w = w b>, abelianized at a, b -> t, same normalization.
LaurentPolynomial alexander_fox_oracle(const TwoBridgeKnot &k);

std::int64_t delta2_at_1(const LaurentPolynomial &normalized);
std::int64_t delta2_at_1(const TwoBridgeKnot &k);
/// |Delta(-1)|
std::int64_t determinant(const TwoBridgeKnot &k);
std::int64_t signature(const TwoBridgeKnot &k);
/// tau = -sigma/2, valid since 2-bridge knots are alternating.
Fraction tau_alternating(const TwoBridgeKnot &k);

struct InvariantSummary {
  LaurentPolynomial alexander;
  std::int64_t delta2 = 0;
  std::int64_t det = 0;
  std::int64_t signature = 0;
  Fraction tau;
};

InvariantSummary compute_invariants(const TwoBridgeKnot &k);

/// Necessary conditions for a purely cosmetic pair r1, r2.
struct NiWuReport {
  bool opposite = false;       // r1 = -r2
  bool q_squared = false;      // q^2 = -1 mod p for r1 = p/q
  bool tau_zero = false;       // tau(K) = 0
  bool survives() const { return opposite && q_squared && tau_zero; }
};

/// Throws std::invalid_argument if r1 == r2 or either is the meridian.
NiWuReport niwu_filter(const TwoBridgeKnot &k, const Slope &r1, const Slope &r2);
NiWuReport niwu_filter(const InvariantSummary &inv, const Slope &r1,
                       const Slope &r2);

/// Delta''(1) != 0, which rules out cosmetic pairs altogether.
bool boyer_lines_obstructs(const TwoBridgeKnot &k);
inline bool boyer_lines_obstructs(const InvariantSummary &inv) {
  return inv.delta2 != 0;
}

} // namespace cosmetic
