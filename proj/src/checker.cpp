#include "cosmetic/checker.hpp"

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace cosmetic {

namespace {

using nlohmann::json;
using i64 = std::int64_t;
using Seq = std::vector<i64>;

struct Ratio {
  i64 num, den; // den > 0, reduced; den == 0 only for 1/0
};

Ratio reduced(i64 n, i64 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const auto g = std::gcd(n, d);
  return g == 0 ? Ratio{n, d} : Ratio{n / g, d / g};
}

Ratio read_slope(const json &j) {
  const auto text = j.get<std::string>();
  const auto slash = text.find('/');
  if (slash == std::string::npos)
    return reduced(std::stoll(text), 1);
  return reduced(std::stoll(text.substr(0, slash)),
                 std::stoll(text.substr(slash + 1)));
}

bool same(const Ratio &a, const Ratio &b) {
  return a.num == b.num && a.den == b.den;
}

i64 dist(const Ratio &a, const Ratio &b) {
  return std::llabs(a.num * b.den - a.den * b.num);
}

std::optional<Ratio> evaluate(const Seq &s) {
  // walk from the innermost term outwards
  i64 n = 0, d = 1;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    const i64 nd = *it * d - n;
    if (nd == 0)
      return std::nullopt;
    n = d;
    d = nd;
  }
  return reduced(n, d);
}

// Every expansion with |a| >= 2 of num/den: try all a in [-bound, bound] and
// keep those whose remaining tail a - den/num lies strictly inside (-1, 1).
void brute_force(i64 num, i64 den, i64 bound, Seq &prefix,
                 std::vector<Seq> &out) {
  for (i64 a = -bound; a <= bound; ++a) {
    if (std::llabs(a) < 2)
      continue;
    const i64 tail_num = a * num - den; // tail = tail_num / num
    if (tail_num == 0) {
      prefix.push_back(a);
      out.push_back(prefix);
      prefix.pop_back();
    } else if (std::llabs(tail_num) < std::llabs(num)) {
      const auto t = reduced(tail_num, num);
      prefix.push_back(a);
      brute_force(t.num, t.den, bound, prefix, out);
      prefix.pop_back();
    }
  }
}

struct Facts {
  Seq entries;
  Ratio slope;
  i64 chi;
  bool orientable;
  i64 boundary;
  i64 genus;
};

i64 balance(const Seq &s) {
  i64 b = 0;
  for (auto a : s)
    b += a > 0 ? 1 : -1;
  return b;
}

class Checker {
public:
  explicit Checker(const json &v) : v_(v) {}

  CheckReport run() {
    try {
      check();
    } catch (const std::exception &e) {
      fail(std::string("malformed certificate: ") + e.what());
    }
    return report_;
  }

private:
  void fail(std::string msg) { report_.problems.push_back(std::move(msg)); }

  void expect(bool cond, const std::string &msg) {
    if (!cond)
      fail(msg);
  }

  void check() {
    p_ = v_.at("knot").at("p").get<i64>();
    q_ = v_.at("knot").at("q").get<i64>();
    if (p_ < 3 || p_ % 2 == 0 || q_ <= 0 || q_ >= p_ || std::gcd(p_, q_) != 1) {
      fail("knot parameters are not a normalized 2-bridge knot");
      return;
    }
    enumerate();
    if (!even_) {
      fail("no unique all-even expansion");
      return;
    }
    expect(v_.at("even_expansion").get<Seq>() == *even_,
           "even_expansion does not match the unique all-even expansion");

    const auto r1 = read_slope(v_.at("r1"));
    const auto r2 = read_slope(v_.at("r2"));
    expect(!same(r1, r2), "r1 equals r2");
    expect(r1.den != 0 && r2.den != 0, "meridian slope in pair");

    const auto kind = v_.at("verdict").get<std::string>();
    if (kind == "INCONCLUSIVE")
      return;
    if (kind != "DISTINGUISHED") {
      fail("unknown verdict '" + kind + "'");
      return;
    }
    const auto &method = v_.at("method");
    if (method == "parity")
      check_parity(r1, r2);
    else if (method == "surfaces")
      check_surfaces(r1, r2);
    else
      fail("DISTINGUISHED verdict without evidence");
  }

  void enumerate() {
    for (const i64 num : {q_, q_ - p_}) {
      std::vector<Seq> found;
      Seq prefix;
      brute_force(num, p_, p_, prefix, found);
      for (auto &s : found)
        all_.push_back(facts_without_slope(std::move(s)));
    }
    int evens = 0;
    for (const auto &f : all_)
      if (f.orientable) {
        ++evens;
        even_ = f.entries;
      }
    if (evens != 1) {
      even_.reset();
      return;
    }
    const auto base = balance(*even_);
    for (auto &f : all_)
      f.slope = reduced(2 * (balance(f.entries) - base), 1);
  }

  Facts facts_without_slope(Seq s) {
    Facts f{std::move(s), {0, 1}, 0, true, 1, 0};
    const auto n = static_cast<i64>(f.entries.size());
    f.chi = 1 - n;
    for (auto a : f.entries)
      if (a % 2 != 0)
        f.orientable = false;
    // a plumbing of bands bounds a knot exactly when the value has odd
    // denominator; otherwise a two-component link
    const auto value = evaluate(f.entries);
    f.boundary = value && value->den % 2 != 0 ? 1 : 2;
    f.genus = f.orientable ? (2 - f.chi - f.boundary) / 2
                           : 2 - f.chi - f.boundary;
    return f;
  }

  const Facts *lookup(const Seq &entries) const {
    for (const auto &f : all_)
      if (f.entries == entries)
        return &f;
    return nullptr;
  }

  const Facts *check_descriptor(const json &d, const std::string &where) {
    const auto entries = d.at("expansion").get<Seq>();
    const auto *f = lookup(entries);
    if (!f) {
      fail(where + ": expansion is not an expansion of the knot");
      return nullptr;
    }
    expect(same(read_slope(d.at("slope")), f->slope),
           where + ": slope mismatch");
    expect(d.at("chi").get<i64>() == f->chi, where + ": chi mismatch");
    expect(d.at("orientable").get<bool>() == f->orientable,
           where + ": orientability mismatch");
    expect(d.at("boundary_components").get<i64>() == f->boundary,
           where + ": boundary count mismatch");
    expect(d.at("genus").get<i64>() == f->genus, where + ": genus mismatch");
    return f;
  }

  void check_parity(const Ratio &r1, const Ratio &r2) {
    const auto &par = v_.at("parity");
    const auto e = read_slope(par.at("even_slope"));
    const auto o = read_slope(par.at("odd_slope"));
    expect((same(e, r1) && same(o, r2)) || (same(e, r2) && same(o, r1)),
           "parity slopes are not the pair");
    expect(e.num % 2 == 0, "even_slope has odd numerator");
    expect(o.num % 2 != 0, "odd_slope has even numerator");
  }

  void check_surfaces(const Ratio &r1, const Ratio &r2) {
    const auto &ub = v_.at("upper_bound");
    const auto &ex = v_.at("exclusion");
    const auto bounded = read_slope(ub.at("target"));
    const auto excluded = read_slope(ex.at("target"));
    expect((same(bounded, r1) && same(excluded, r2)) ||
               (same(bounded, r2) && same(excluded, r1)),
           "certificate targets are not the pair");
    expect(bounded.num % 2 == 0 && excluded.num % 2 == 0,
           "surface evidence needs even numerators");

    // upper bound
    const auto *base = check_descriptor(ub.at("base"), "upper_bound.base");
    const auto d = ub.at("distance").get<i64>();
    const auto attachments = ub.at("attachments").get<i64>();
    const auto genus = ub.at("resulting_genus").get<i64>();
    if (base) {
      expect(!base->orientable, "upper_bound.base is orientable");
      expect(d == dist(base->slope, bounded), "upper_bound.distance mismatch");
      expect(d == 0 || d == 2, "upper_bound.distance not in {0, 2}");
      expect(attachments * 2 == d, "upper_bound.attachments != distance/2");
      expect(genus == base->genus + attachments,
             "upper_bound.resulting_genus mismatch");
    }

    // exclusion
    const auto G = ex.at("excluded_genus_max").get<i64>();
    expect(G >= genus, "exclusion does not reach the upper-bound genus");
    std::map<Seq, std::map<std::string, i64>> required; // entries -> case -> closed genus
    for (const auto &f : all_) {
      if (f.boundary != 1) {
        if (f.genus <= G)
          fail("multi-boundary candidate within genus bound");
        continue;
      }
      if (!f.orientable) {
        if (f.genus <= G)
          required[f.entries]["disk"] = f.genus;
        if (f.genus <= G - 1)
          required[f.entries]["moebius"] = f.genus + 1;
      } else if (f.genus <= G - 1) {
        required[f.entries]["orientable_moebius"] = 2 - f.chi;
      }
    }

    std::set<Seq> seen;
    for (const auto &cand : ex.at("candidates")) {
      const auto entries = cand.at("surface").at("expansion").get<Seq>();
      const auto *f = check_descriptor(cand.at("surface"), "exclusion candidate");
      if (!f)
        continue;
      if (!seen.insert(entries).second) {
        fail("candidate listed twice");
        continue;
      }
      const auto it = required.find(entries);
      if (it == required.end()) {
        fail("candidate outside the genus range");
        continue;
      }
      std::map<std::string, i64> cases;
      for (const auto &c : cand.at("cases")) {
        const auto kind = c.at("case").get<std::string>();
        const auto cd = c.at("distance").get<i64>();
        const auto own = dist(f->slope, excluded);
        expect(cd == own, "case distance mismatch");
        if (kind == "disk")
          expect(!same(f->slope, excluded), "disk case not ruled out");
        else
          expect(own != 2, kind + " case not ruled out");
        cases[kind] = c.at("closed_genus").get<i64>();
      }
      expect(cases == it->second, "candidate cases incomplete or wrong");
    }
    expect(seen.size() == required.size(),
           "exclusion certificate misses candidate surfaces");
  }

  const json &v_;
  CheckReport report_;
  i64 p_ = 0, q_ = 0;
  std::vector<Facts> all_;
  std::optional<Seq> even_;
};

} // namespace

CheckReport check_certificate(const nlohmann::json &verdict) {
  return Checker(verdict).run();
}

} // namespace cosmetic
