#include "cosmetic/invariants.hpp"

#include "cosmetic/errors.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>

namespace cosmetic {

namespace {

void require_tridiagonal(const SeifertForm &v) {
  const auto n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (v.matrix[i].size() != n)
      throw std::invalid_argument("Seifert matrix is not square");
    for (std::size_t j = 0; j < n; ++j)
      if ((i > j + 1 || j > i + 1) && v.matrix[i][j] != 0)
        throw std::invalid_argument("Seifert matrix is not tridiagonal");
  }
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  const auto d = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? d - 1 : d;
}

int sign(std::int64_t x) { return (x > 0) - (x < 0); }

} // namespace

SeifertForm seifert_matrix(const CFExpansion &even) {
  const auto n = even.length();
  SeifertForm v{IntMatrix(n, std::vector<std::int64_t>(n, 0))};
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = even.entries()[i];
    if (a % 2 != 0)
      throw std::invalid_argument("Seifert matrix needs an all-even expansion");
    v.matrix[i][i] = a / 2;
    if (i + 1 < n)
      v.matrix[i][i + 1] = 1;
  }
  return v;
}

// Tridiagonal determinant by the three-term recurrence
//   D_k = M[k][k] D_{k-1} - M[k][k-1] M[k-1][k] D_{k-2}.
LaurentPolynomial seifert_alexander(const SeifertForm &v) {
  require_tridiagonal(v);
  const auto &m = v.matrix;
  const auto t = LaurentPolynomial::monomial(1, 1);
  const auto entry = [&](std::size_t i, std::size_t j) {
    // (V - t V^T)[i][j]
    return LaurentPolynomial::constant(m[i][j]) -
           t * LaurentPolynomial::constant(m[j][i]);
  };
  auto prev = LaurentPolynomial::constant(1);
  auto cur = LaurentPolynomial::constant(1);
  for (std::size_t k = 0; k < v.size(); ++k) {
    auto next = entry(k, k) * cur;
    if (k > 0)
      next = next - entry(k, k - 1) * entry(k - 1, k) * prev;
    prev = std::exchange(cur, std::move(next));
  }
  return cur;
}

std::int64_t symmetrized_determinant(const SeifertForm &v) {
  require_tridiagonal(v);
  const auto &m = v.matrix;
  std::int64_t prev = 1, cur = 1;
  for (std::size_t k = 0; k < v.size(); ++k) {
    std::int64_t next = 2 * m[k][k] * cur;
    if (k > 0) {
      const auto off = m[k][k - 1] + m[k - 1][k];
      next -= off * off * prev;
    }
    prev = std::exchange(cur, next);
  }
  return cur;
}

// Leading principal minors D_k of V + V^T give LDL^T pivots D_k / D_{k-1};
// the signature counts their signs. A vanishing minor would need a
// different pivoting scheme, which chain forms with |2c| >= 2 never require.
std::int64_t signature(const SeifertForm &v) {
  require_tridiagonal(v);
  const auto &m = v.matrix;
  std::int64_t prev = 1, cur = 1, sig = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    std::int64_t next = 2 * m[k][k] * cur;
    if (k > 0) {
      const auto off = m[k][k - 1] + m[k - 1][k];
      next -= off * off * prev;
    }
    if (next == 0)
      throw InvariantViolation("zero leading minor in V + V^T");
    sig += sign(next) * sign(cur);
    prev = std::exchange(cur, next);
  }
  return sig;
}

LaurentPolynomial alexander(const TwoBridgeKnot &k) {
  return seifert_alexander(seifert_matrix(even_expansion(k)))
      .alexander_normalized();
}

LaurentPolynomial alexander_fox_oracle(const TwoBridgeKnot &k) {
  const auto p = k.p();
  const auto q = k.q() % 2 != 0 ? k.q() : k.q() - p;

  // w = b^e1 a^e2 b^e3 ... a^e_{p-1}, ei = (-1)^floor(i q / p)
  struct Letter {
    bool is_a;
    int exp;
  };
  std::vector<Letter> w;
  for (std::int64_t i = 1; i < p; ++i) {
    const int e = floor_div(i * q, p) % 2 == 0 ? 1 : -1;
    w.push_back({i % 2 == 0, e});
  }
  // relator a w b^-1 w^-1
  std::vector<Letter> r{{true, 1}};
  r.insert(r.end(), w.begin(), w.end());
  r.push_back({false, -1});
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    r.push_back({it->is_a, -it->exp});

  // d(uv)/da = du/da + u dv/da; da/da = 1, d(a^-1)/da = -a^-1.
  // Under a, b -> t the prefix u becomes t^(exponent sum of u).
  std::map<std::int64_t, std::int64_t> terms;
  std::int64_t prefix = 0;
  for (const auto &letter : r) {
    if (letter.is_a) {
      if (letter.exp == 1)
        terms[prefix] += 1;
      else
        terms[prefix - 1] -= 1;
    }
    prefix += letter.exp;
  }
  return LaurentPolynomial::from_map(terms).alexander_normalized();
}

std::int64_t delta2_at_1(const LaurentPolynomial &normalized) {
  return normalized.derivative().derivative().eval(1);
}

std::int64_t delta2_at_1(const TwoBridgeKnot &k) {
  return delta2_at_1(alexander(k));
}

std::int64_t determinant(const TwoBridgeKnot &k) {
  return std::llabs(alexander(k).eval(-1));
}

std::int64_t signature(const TwoBridgeKnot &k) {
  return signature(seifert_matrix(even_expansion(k)));
}

Fraction tau_alternating(const TwoBridgeKnot &k) {
  return Fraction::make(-signature(k), 2);
}

InvariantSummary compute_invariants(const TwoBridgeKnot &k) {
  const auto form = seifert_matrix(even_expansion(k));
  InvariantSummary s;
  s.alexander = seifert_alexander(form).alexander_normalized();
  s.delta2 = delta2_at_1(s.alexander);
  s.det = std::llabs(s.alexander.eval(-1));
  s.signature = signature(form);
  s.tau = Fraction::make(-s.signature, 2);
  return s;
}

NiWuReport niwu_filter(const InvariantSummary &inv, const Slope &r1,
                       const Slope &r2) {
  if (r1.is_meridian() || r2.is_meridian())
    throw std::invalid_argument("the meridian 1/0 is a trivial surgery slope");
  if (r1 == r2)
    throw std::invalid_argument("slopes must differ, both are " + r1.str());
  NiWuReport rep;
  rep.opposite = r1 == -r2;
  const auto p = std::llabs(r1.num());
  const auto q = r1.den();
  // q^2 = -1 mod p; mod 1 everything vanishes
  rep.q_squared = p != 0 && (q * q + 1) % p == 0;
  rep.tau_zero = inv.tau.num == 0;
  return rep;
}

NiWuReport niwu_filter(const TwoBridgeKnot &k, const Slope &r1,
                       const Slope &r2) {
  return niwu_filter(compute_invariants(k), r1, r2);
}

bool boyer_lines_obstructs(const TwoBridgeKnot &k) {
  return delta2_at_1(k) != 0;
}

} // namespace cosmetic
