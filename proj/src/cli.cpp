#include "cosmetic/cli.hpp"

#include "cosmetic/checker.hpp"
#include "cosmetic/errors.hpp"
#include "cosmetic/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace cosmetic {

namespace {

using nlohmann::json;

enum class Format { Table, Json, Tsv };

struct UsageError : std::invalid_argument {
  UsageError(int code, const std::string &msg)
      : std::invalid_argument(msg), code(code) {}
  int code;
};

std::string join(const Entries &e) {
  std::string s = "[";
  for (std::size_t i = 0; i < e.size(); ++i)
    s += (i ? ", " : "") + std::to_string(e[i]);
  return s + "]";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Slope read_surgery_slope(const std::string &text) {
  const auto s = parse_slope(text);
  if (s.is_meridian())
    throw UsageError(kExitMeridian,
                     "1/0 is the meridian: surgery along it is trivial");
  return s;
}

void check_pair(const Slope &r1, const Slope &r2) {
  if (r1 == r2)
    throw UsageError(kExitEqualSlopes,
                     "slopes must be distinct, both are " + r1.str());
}

// --- surfaces ---------------------------------------------------------------

int cmd_surfaces(const std::string &knot_text, Format fmt, std::ostream &out) {
  const auto table = surface_table(parse_knot(knot_text));
  const auto report = surface_report(table);
  if (fmt == Format::Json) {
    out << report.dump(2) << "\n";
    return kExitOk;
  }
  if (fmt == Format::Tsv) {
    out << "genus\torientable\tslope\tchi\tboundary_components\texpansion\n";
    for (const auto &d : table.spanning)
      out << d.genus << '\t' << (d.orientable ? 1 : 0) << '\t'
          << d.boundary_slope.str() << '\t' << d.euler << '\t'
          << d.boundary_components << '\t' << join(d.expansion.entries())
          << "\n";
    return kExitOk;
  }
  out << table.knot.str() << "  even expansion " << join(table.even.entries())
      << " (of " << table.even.target().str() << ")\n\n";
  out << "genus  orientable  slope    chi  b  expansion\n";
  for (const auto &d : table.spanning) {
    std::ostringstream row;
    row.setf(std::ios::left);
    row.width(7);
    row << d.genus;
    row.width(12);
    row << yes_no(d.orientable);
    row.width(9);
    row << d.boundary_slope.str();
    row.width(5);
    row << d.euler;
    row.width(3);
    row << d.boundary_components;
    row << join(d.expansion.entries());
    out << row.str() << "\n";
  }
  const auto &counts = report.at("counts");
  out << "\nspanning surfaces: " << table.spanning.size()
      << "\nnon-orientable by genus: "
      << counts.at("nonorientable_by_genus").dump()
      << "\norientable by genus: " << counts.at("orientable_by_genus").dump()
      << "\ntwo-boundary descriptors (not spanning): "
      << table.multi_boundary.size() << "\n";
  for (const auto &d : table.multi_boundary)
    out << "  " << join(d.expansion.entries()) << " slope "
        << d.boundary_slope.str() << "\n";
  return kExitOk;
}

// --- invariants -------------------------------------------------------------

int cmd_invariants(const std::string &knot_text, Format fmt,
                   std::ostream &out) {
  const auto k = parse_knot(knot_text);
  const auto inv = compute_invariants(k);
  if (fmt == Format::Json) {
    json j = inv;
    j["knot"] = k;
    j["amphicheiral"] = is_amphicheiral(k);
    j["boyer_lines_obstructs"] = boyer_lines_obstructs(inv);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (fmt == Format::Tsv) {
    out << "knot\talexander\tdelta2\tdet\tsignature\ttau\tamphicheiral\n"
        << k.str() << '\t' << inv.alexander.str() << '\t' << inv.delta2 << '\t'
        << inv.det << '\t' << inv.signature << '\t' << json(inv.tau).dump()
        << '\t' << (is_amphicheiral(k) ? 1 : 0) << "\n";
    return kExitOk;
  }
  out << k.str() << "\n"
      << "  Alexander polynomial  " << inv.alexander.str() << "\n"
      << "  Delta''(1)            " << inv.delta2 << "\n"
      << "  determinant           " << inv.det << "\n"
      << "  signature             " << inv.signature << "\n"
      << "  tau (= -sigma/2)      " << json(inv.tau).dump() << "\n"
      << "  amphicheiral          " << yes_no(is_amphicheiral(k)) << "\n"
      << "  Boyer-Lines obstructs " << yes_no(boyer_lines_obstructs(inv))
      << "\n";
  return kExitOk;
}

// --- obstruct ---------------------------------------------------------------

void describe_verdict(const Verdict &v, std::ostream &out) {
  out << "verdict: " << to_string(v.kind) << "\n";
  if (v.surfaces) {
    const auto &ub = v.surfaces->upper;
    const auto &ex = v.surfaces->exclusion;
    out << "  K(" << ub.target.str()
        << ") contains a closed non-orientable surface of genus "
        << ub.resulting_genus << ": spanning surface of genus "
        << ub.base.genus << ", slope " << ub.base.boundary_slope.str()
        << ", distance " << ub.distance << ", " << ub.attachments
        << " Moebius band(s) attached\n"
        << "  K(" << ex.target.str()
        << ") contains none of genus <= " << ex.excluded_genus_max << ": "
        << ex.candidates.size() << " candidate surface(s) ruled out\n";
  } else if (v.parity) {
    out << "  K(" << v.parity->even_slope.str()
        << ") contains a closed non-orientable surface, K("
        << v.parity->odd_slope.str() << ") contains none (parity)\n";
  }
  for (const auto &r : v.reasons)
    out << "  " << r << "\n";
}

int cmd_obstruct(const std::string &knot_text, const std::string &r1_text,
                 const std::string &r2_text, Format fmt, bool verify,
                 std::ostream &out, std::ostream &err) {
  const auto k = parse_knot(knot_text);
  const auto r1 = read_surgery_slope(r1_text);
  const auto r2 = read_surgery_slope(r2_text);
  check_pair(r1, r2);

  const auto inv = compute_invariants(k);
  const auto niwu = niwu_filter(inv, r1, r2);
  const auto verdict = distinguish(k, r1, r2);
  const json cert = verdict;

  std::optional<CheckReport> check;
  if (verify)
    check = check_certificate(cert);

  if (fmt == Format::Json) {
    json j{{"knot", k},
           {"invariants", inv},
           {"boyer_lines_obstructs", boyer_lines_obstructs(inv)},
           {"niwu", niwu},
           {"certificate", cert}};
    if (check)
      j["check"] = json{{"ok", check->ok()}, {"problems", check->problems}};
    out << j.dump(2) << "\n";
  } else if (fmt == Format::Tsv) {
    out << "knot\tr1\tr2\tboyer_lines\tniwu\tverdict\tmethod\n"
        << k.str() << '\t' << r1.str() << '\t' << r2.str() << '\t'
        << (boyer_lines_obstructs(inv) ? 1 : 0) << '\t'
        << (niwu.survives() ? 1 : 0) << '\t' << to_string(verdict.kind)
        << '\t' << (cert.at("method").is_null() ? "-" : cert.at("method").get<std::string>())
        << "\n";
  } else {
    out << "knot " << k.str() << ", slopes " << r1.str() << " and "
        << r2.str() << "\n"
        << "Boyer-Lines: Delta''(1) = " << inv.delta2 << " -> "
        << (boyer_lines_obstructs(inv) ? "obstructs (no cosmetic pair)"
                                       : "does not obstruct")
        << "\n"
        << "Ni-Wu: (a) r1 = -r2: " << yes_no(niwu.opposite)
        << "  (b) q^2 = -1 mod p: " << yes_no(niwu.q_squared)
        << "  (c) tau = 0: " << yes_no(niwu.tau_zero) << " -> "
        << (niwu.survives() ? "pair survives" : "pair excluded") << "\n";
    describe_verdict(verdict, out);
    out << "certificate:\n" << cert.dump(2) << "\n";
    if (check)
      out << "verify: " << (check->ok() ? "OK" : "FAILED") << "\n";
  }
  if (check && !check->ok()) {
    for (const auto &p : check->problems)
      err << "certificate check: " << p << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

// --- scan -------------------------------------------------------------------

int cmd_scan(const ScanOptions &opts, bool all, bool serial, Format fmt,
             bool verify, std::ostream &out, std::ostream &err) {
  if (opts.max_p < 3)
    throw UsageError(kExitUsage, "--max-p must be >= 3");
  if (opts.max_slope_num < 2 || opts.max_slope_den < 1)
    throw UsageError(kExitUsage, "slope bounds must be >= 2 (num) and >= 1 (den)");
  const auto records = serial ? scan_serial(opts) : scan_parallel(opts);

  std::size_t surviving_knots = 0, pairs = 0, distinguished = 0, checked = 0;
  std::vector<std::string> problems;
  for (const auto &rec : records) {
    if (!rec.boyer_lines)
      ++surviving_knots;
    for (const auto &pr : rec.pairs) {
      ++pairs;
      if (pr.verdict.kind == VerdictKind::Distinguished)
        ++distinguished;
      if (verify) {
        const auto report = check_certificate(json(pr.verdict));
        ++checked;
        for (const auto &p : report.problems)
          problems.push_back(rec.entry.knot.str() + " " + pr.r1.str() + " " +
                             pr.r2.str() + ": " + p);
      }
    }
  }

  const json summary{{"knots", records.size()},
                     {"boyer_lines_pass", surviving_knots},
                     {"pairs", pairs},
                     {"distinguished", distinguished},
                     {"verified", checked},
                     {"check_failures", problems.size()}};

  if (fmt == Format::Json) {
    json list = json::array();
    for (const auto &rec : records)
      if (all || !rec.pairs.empty())
        list.push_back(rec);
    out << json{{"options",
                 {{"max_p", opts.max_p},
                  {"max_slope_num", opts.max_slope_num},
                  {"max_slope_den", opts.max_slope_den}}},
                {"records", list},
                {"summary", summary}}
               .dump(2)
        << "\n";
  } else if (fmt == Format::Tsv) {
    out << "knot\tdet\tdelta2\tsignature\tboyer_lines\tr1\tr2\tverdict\tmethod"
           "\tgenus\n";
    for (const auto &rec : records) {
      const auto prefix = rec.entry.knot.str() + '\t' +
                          std::to_string(rec.invariants.det) + '\t' +
                          std::to_string(rec.invariants.delta2) + '\t' +
                          std::to_string(rec.invariants.signature) + '\t' +
                          (rec.boyer_lines ? "1" : "0");
      if (rec.pairs.empty() && all)
        out << prefix << "\t-\t-\t-\t-\t-\n";
      for (const auto &pr : rec.pairs) {
        const auto &v = pr.verdict;
        out << prefix << '\t' << pr.r1.str() << '\t' << pr.r2.str() << '\t'
            << to_string(v.kind) << '\t'
            << (v.surfaces ? "surfaces" : v.parity ? "parity" : "-") << '\t'
            << (v.surfaces ? std::to_string(v.surfaces->upper.resulting_genus)
                           : "-")
            << "\n";
      }
    }
  } else {
    for (const auto &rec : records) {
      if (rec.pairs.empty() && !all)
        continue;
      out << rec.entry.knot.str() << "  det " << rec.invariants.det
          << "  sigma " << rec.invariants.signature << "  Delta''(1) "
          << rec.invariants.delta2
          << (rec.entry.is_mirror_image ? "  (mirror of " +
                                              rec.entry.mirror->str() + ")"
                                        : "")
          << "\n";
      for (const auto &pr : rec.pairs) {
        out << "  " << pr.r1.str() << ", " << pr.r2.str() << "  "
            << to_string(pr.verdict.kind);
        if (pr.verdict.surfaces)
          out << "  (genus " << pr.verdict.surfaces->upper.resulting_genus
              << " in K(" << pr.verdict.surfaces->upper.target.str()
              << "), none in K(" << pr.verdict.surfaces->exclusion.target.str()
              << "))";
        else if (pr.verdict.parity)
          out << "  (parity)";
        out << "\n";
      }
    }
    out << "scanned " << records.size() << " knots with p <= " << opts.max_p
        << "; " << surviving_knots << " pass Boyer-Lines; " << pairs
        << " pairs survive Ni-Wu; " << distinguished << " distinguished";
    if (verify)
      out << "; " << checked << " certificates checked, " << problems.size()
          << " failures";
    out << "\n";
  }
  for (const auto &p : problems)
    err << "certificate check: " << p << "\n";
  return problems.empty() ? kExitOk : kExitCheckFailed;
}

// --- check ------------------------------------------------------------------

int cmd_check(const std::string &path, std::ostream &out, std::ostream &err) {
  json j;
  try {
    if (path == "-") {
      j = json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in)
        throw UsageError(kExitUsage, "cannot open " + path);
      j = json::parse(in);
    }
  } catch (const json::parse_error &e) {
    throw UsageError(kExitUsage, std::string("invalid JSON: ") + e.what());
  }
  // accept a bare verdict, an obstruct --json payload, or a scan --json payload
  std::vector<json> verdicts;
  if (j.contains("certificate"))
    verdicts.push_back(j.at("certificate"));
  else if (j.contains("records"))
    for (const auto &rec : j.at("records"))
      for (const auto &pr : rec.at("pairs"))
        verdicts.push_back(pr.at("verdict"));
  else
    verdicts.push_back(j);

  std::size_t failures = 0;
  for (const auto &v : verdicts) {
    const auto report = check_certificate(v);
    if (!report.ok()) {
      ++failures;
      for (const auto &p : report.problems)
        err << "certificate check: " << p << "\n";
    }
  }
  out << verdicts.size() << " certificate(s) checked, " << failures
      << " failed\n";
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Cosmetic surgery obstructions for 2-bridge knots"};
  app.require_subcommand(1);

  bool as_json = false, as_tsv = false, verify = false;
  const auto add_format = [&](CLI::App *cmd) {
    auto *j = cmd->add_flag("--json", as_json, "machine-readable JSON output");
    auto *t = cmd->add_flag("--tsv", as_tsv, "tab-separated output");
    j->excludes(t);
  };

  std::string knot, r1, r2, path;

  auto *surfaces = app.add_subcommand("surfaces", "list essential spanning surfaces");
  surfaces->add_option("knot", knot, "S(p,q), p/q or 9_27")->required();
  add_format(surfaces);

  auto *invariants = app.add_subcommand("invariants", "classical invariants");
  invariants->add_option("knot", knot, "S(p,q), p/q or 9_27")->required();
  add_format(invariants);

  auto *obstruct = app.add_subcommand(
      "obstruct", "filters and non-orientable surface obstruction for a pair");
  obstruct->add_option("knot", knot, "S(p,q), p/q or 9_27")->required();
  obstruct->add_option("r1", r1, "first slope p/q")->required();
  obstruct->add_option("r2", r2, "second slope p/q")->required();
  obstruct->add_flag("--verify", verify, "run the independent certificate checker");
  add_format(obstruct);

  ScanOptions opts;
  bool all = false, serial = false;
  auto *scan = app.add_subcommand("scan", "scan all 2-bridge knots up to --max-p");
  scan->add_option("--max-p", opts.max_p, "largest p")->capture_default_str();
  scan->add_option("--max-slope-num", opts.max_slope_num,
                   "largest slope numerator")
      ->capture_default_str();
  auto *den_opt = scan->add_option("--max-slope-den", opts.max_slope_den,
                                   "largest slope denominator (default: "
                                   "--max-slope-num)");
  scan->add_flag("--all", all, "include knots without surviving pairs");
  scan->add_flag("--serial", serial, "use the single-threaded reference scan");
  scan->add_flag("--verify", verify, "check every emitted certificate");
  add_format(scan);

  auto *check = app.add_subcommand("check", "verify certificate JSON");
  check->add_option("file", path, "JSON file, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << e.what() << "\n";
    if (auto *sub = app.get_subcommands().empty() ? nullptr
                                                  : app.get_subcommands().front())
      err << sub->help();
    return kExitUsage;
  }
  if (den_opt->count() == 0)
    opts.max_slope_den = opts.max_slope_num;

  const auto fmt = as_json ? Format::Json : as_tsv ? Format::Tsv : Format::Table;
  try {
    if (surfaces->parsed())
      return cmd_surfaces(knot, fmt, out);
    if (invariants->parsed())
      return cmd_invariants(knot, fmt, out);
    if (obstruct->parsed())
      return cmd_obstruct(knot, r1, r2, fmt, verify, out, err);
    if (scan->parsed())
      return cmd_scan(opts, all, serial, fmt, verify, out, err);
    if (check->parsed())
      return cmd_check(path, out, err);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return e.code;
  } catch (const InvariantViolation &e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace cosmetic
