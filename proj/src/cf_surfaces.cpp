#include "cosmetic/cf_surfaces.hpp"

#include "cosmetic/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace cosmetic {

Fraction cf_value(std::span<const std::int64_t> entries) {
  if (entries.empty())
    throw std::invalid_argument("empty continued fraction");
  // x_{n+1} = 0, x_i = 1/(a_i - x_{i+1})
  std::int64_t num = 0, den = 1;
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    const std::int64_t next_den = *it * den - num;
    if (next_den == 0)
      throw DegenerateExpansion("zero denominator while evaluating continued "
                                "fraction");
    num = std::exchange(den, next_den);
  }
  return Fraction::make(num, den);
}

CFExpansion::CFExpansion(Entries entries)
    : entries_(std::move(entries)), target_{} {
  if (entries_.empty())
    throw std::invalid_argument("continued fraction expansion is empty");
  for (auto a : entries_)
    if (std::llabs(a) < 2)
      throw std::invalid_argument("expansion entry " + std::to_string(a) +
                                  " has |a| < 2");
  target_ = cf_value(entries_);
}

bool CFExpansion::all_even() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](auto a) { return a % 2 == 0; });
}

std::vector<Fraction> representatives(const TwoBridgeKnot &k) {
  return {Fraction::make(k.q(), k.p()), Fraction::make(k.q() - k.p(), k.p())};
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  const auto d = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? d - 1 : d;
}

// Tails of an expansion with |ai| >= 2 lie strictly inside (-1,1), so at each
// level a must be floor(1/x) or ceil(1/x); 1/x integral ends the expansion.
// |num| strictly decreases, which bounds the depth.
void expand(std::int64_t num, std::int64_t den, Entries &prefix,
            std::vector<CFExpansion> &out) {
  if (den % num == 0) {
    const auto a = den / num;
    if (std::llabs(a) >= 2) {
      prefix.push_back(a);
      out.emplace_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  const auto lo = floor_div(den, num);
  for (const auto a : {lo, lo + 1}) {
    if (std::llabs(a) < 2)
      continue;
    // tail = a - den/num
    auto tail = Fraction::make(a * num - den, num);
    prefix.push_back(a);
    expand(tail.num, tail.den, prefix, out);
    prefix.pop_back();
  }
}

std::int64_t sign_balance(const Entries &entries) {
  std::int64_t s = 0;
  for (auto a : entries)
    s += a > 0 ? 1 : -1;
  return s;
}

} // namespace

std::vector<CFExpansion> expansions_of(const Fraction &x) {
  if (x.num == 0 || std::llabs(x.num) >= x.den)
    throw std::invalid_argument("expansions exist only for 0 < |x| < 1, got " +
                                x.str());
  std::vector<CFExpansion> out;
  Entries prefix;
  expand(x.num, x.den, prefix, out);
  return out;
}

std::vector<CFExpansion> enumerate_expansions(const TwoBridgeKnot &k) {
  std::vector<CFExpansion> out;
  for (const auto &rep : representatives(k)) {
    auto part = expansions_of(rep);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

CFExpansion even_expansion(const TwoBridgeKnot &k) {
  std::vector<CFExpansion> found;
  for (const auto &rep : representatives(k)) {
    // Exactly one of floor/ceil is even; follow it until 1/x is integral.
    Entries entries;
    std::int64_t num = rep.num, den = rep.den;
    while (den % num != 0) {
      const auto lo = floor_div(den, num);
      const auto a = lo % 2 == 0 ? lo : lo + 1;
      entries.push_back(a);
      const auto tail = Fraction::make(a * num - den, num);
      num = tail.num;
      den = tail.den;
    }
    const auto last = den / num;
    if (last % 2 == 0 && std::llabs(last) >= 2) {
      entries.push_back(last);
      found.emplace_back(std::move(entries));
    }
  }
  if (found.size() != 1)
    throw InvariantViolation(k.str() + ": expected one all-even expansion, found " +
                             std::to_string(found.size()));
  return found.front();
}

Slope boundary_slope(const CFExpansion &e, const CFExpansion &even) {
  return Slope::integer(2 * (sign_balance(e.entries()) -
                             sign_balance(even.entries())));
}

int boundary_count(std::span<const std::int64_t> entries) {
  const auto n = entries.size();
  if (n == 0)
    throw std::invalid_argument("boundary_count of empty expansion");
  if (n == 1)
    return entries[0] % 2 == 0 ? 2 : 1;

  // Band b is a strip [0,L]x[0,1] closed up at its ends, with a side flip
  // y -> 1-y when it carries an odd number of half-twists. Square s plumbs
  // band s (running along x) to band s+1 (running along y). Each square has
  // four corner points; band b's point (x,y) in square s is the corner
  // (s,x,y) if b == s and (s,y,x) if b == s+1.
  const auto corner = [](std::size_t band, std::size_t square, int x, int y) {
    if (band != square)
      std::swap(x, y);
    return 4 * square + 2 * static_cast<std::size_t>(x) +
           static_cast<std::size_t>(y);
  };

  std::vector<std::size_t> parent(4 * (n - 1));
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&](std::size_t v) {
    while (parent[v] != v)
      v = parent[v] = parent[parent[v]];
    return v;
  };
  const auto join = [&](std::size_t u, std::size_t v) {
    parent[find(u)] = find(v);
  };

  for (std::size_t b = 0; b < n; ++b) {
    // squares met in order along the core of band b
    std::array<std::size_t, 2> squares{};
    std::size_t count = 0;
    if (b > 0)
      squares[count++] = b - 1;
    if (b + 1 < n)
      squares[count++] = b;
    const int flip = static_cast<int>(std::llabs(entries[b]) % 2);

    for (int y = 0; y <= 1; ++y) {
      const auto first = squares[0];
      const auto last = squares[count - 1];
      if (count == 2) // arc between the two squares, no twisting
        join(corner(b, first, 1, y), corner(b, last, 0, y));
      // arc from the last square around the back of the band to the first
      join(corner(b, last, 1, y), corner(b, first, 0, y ^ flip));
    }
  }

  int components = 0;
  for (std::size_t v = 0; v < parent.size(); ++v)
    if (find(v) == v)
      ++components;
  return components;
}

SurfaceDescriptor describe(const CFExpansion &e, const CFExpansion &even) {
  const auto n = static_cast<std::int64_t>(e.length());
  SurfaceDescriptor d{e, boundary_slope(e, even)};
  d.euler = 1 - n;
  d.orientable = e.all_even();
  d.boundary_components = boundary_count(e.entries());
  const auto b = static_cast<std::int64_t>(d.boundary_components);
  if (d.orientable) {
    if ((2 - d.euler - b) % 2 != 0)
      throw InvariantViolation("orientable surface with odd 2 - chi - b");
    d.genus = (2 - d.euler - b) / 2;
  } else {
    d.genus = 2 - d.euler - b;
  }
  if (!d.boundary_slope.is_integral() || !d.boundary_slope.numerator_is_even())
    throw InvariantViolation("boundary slope " + d.boundary_slope.str() +
                             " is not an even integer");
  return d;
}

SurfaceTable surface_table(const TwoBridgeKnot &k) {
  SurfaceTable table{k, even_expansion(k), {}, {}};
  for (const auto &e : enumerate_expansions(k)) {
    auto d = describe(e, table.even);
    (d.boundary_components == 1 ? table.spanning : table.multi_boundary)
        .push_back(std::move(d));
  }
  const auto key = [](const SurfaceDescriptor &d) {
    return std::tie(d.genus, d.boundary_slope, d.expansion.entries());
  };
  const auto by_key = [&](const SurfaceDescriptor &a,
                          const SurfaceDescriptor &b) {
    return key(a) < key(b);
  };
  std::sort(table.spanning.begin(), table.spanning.end(), by_key);
  std::sort(table.multi_boundary.begin(), table.multi_boundary.end(), by_key);
  return table;
}

std::vector<SurfaceDescriptor> spanning_surfaces(const TwoBridgeKnot &k) {
  return surface_table(k).spanning;
}

} // namespace cosmetic
