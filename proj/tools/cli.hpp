#pragma once

// Command-line front end.  run_cli is separate from main so tests can drive
// it in-process.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nm/arith.hpp"
#include "nm/constructions.hpp"
#include "nm/error.hpp"
#include "nm/ideals/koszul.hpp"
#include "nm/ideals/monomial.hpp"
#include "nm/monoid.hpp"
#include "nm/presentation.hpp"
#include "nm/search.hpp"
#include "nm/serialize.hpp"
#include "nm/sumset.hpp"
#include "nm/verify.hpp"

namespace nm::cli {

using json = nlohmann::json;

enum exit_code : int { ok = 0, usage = 2, verify_failed = 3, resource_cap = 4, interrupted = 130 };

/// Set from a signal handler; searches stop picking up work units.
inline std::atomic<bool> stop_requested{false};

enum class format { human, json, csv };

struct Document {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  json timings = json::object();

  [[nodiscard]] json to_json() const {
    return {{"schema_version", schema_version},
            {"command", command},
            {"inputs", inputs},
            {"results", results},
            {"timings", timings}};
  }
};

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// "a..b" or a single value.
inline verify::Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw error(error_kind::invalid_argument, "bad range '" + text + "' (expected a..b)");
  }
}

inline std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) {
      if (!s.empty()) s += ',';
      s += scalar_text(x);
    }
    return s;
  }
  return v.dump();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// Flattens nested objects to dotted keys.
inline void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (v.is_array() && !v.empty() && v.front().is_object()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "." + std::to_string(i), out);
    return;
  }
  out.emplace_back(prefix, scalar_text(v));
}

/// Human and csv rendering; a "rows" array in the results becomes a table.
inline void render(const Document& doc, format fmt, std::ostream& out) {
  if (fmt == format::json) {
    out << doc.to_json().dump(2) << '\n';
    return;
  }
  const json& res = doc.results;
  if (res.contains("rows") && res["rows"].is_array() && !res["rows"].empty()) {
    std::vector<std::string> cols;
    for (const auto& [k, v] : res["rows"].front().items()) cols.push_back(k);
    if (res.contains("columns")) cols = res["columns"].get<std::vector<std::string>>();
    const char* sep = fmt == format::csv ? "," : "  ";
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? sep : "") << cols[i];
    out << '\n';
    for (const auto& row : res["rows"]) {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        const auto cell = row.contains(cols[i]) ? scalar_text(row[cols[i]]) : std::string("-");
        out << (i ? sep : "") << (fmt == format::csv ? csv_field(cell) : cell);
      }
      out << '\n';
    }
    if (fmt == format::human)
      for (const auto& [k, v] : res.items())
        if (k != "rows" && k != "columns") out << k << ": " << scalar_text(v) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> kv;
  flatten(res, "", kv);
  if (fmt == format::csv) {
    out << "key,value\n";
    for (const auto& [k, v] : kv) out << csv_field(k) << ',' << csv_field(v) << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : kv) width = std::max(width, k.size());
  for (const auto& [k, v] : kv) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
}

inline json invariants_json(const NumericalMonoid& g) {
  const auto f = frobenius(g);
  const auto pres = rho(g);
  json betti = json::array();
  for (const auto& b : pres.betti_elements) betti.push_back({{"value", b.value}, {"components", b.components}});
  return {{"generators", g.generators()},
          {"mult", g.multiplicity()},
          {"edim", g.edim()},
          {"apery", apery_set(g).elements},
          {"frobenius", f ? json(*f) : json(nullptr)},
          {"gaps", static_cast<std::int64_t>(gaps(g).size())},
          {"pseudo_frobenius", pseudo_frobenius(g)},
          {"type", type(g)},
          {"rho", pres.rho},
          {"betti_elements", betti}};
}

inline json bounds_json(std::int64_t e, std::int64_t m) {
  const auto [r, s] = rs_decompose(e, m);
  const auto k = not_sharp_region(e, m);
  json out = {{"e", e},
              {"m", m},
              {"r", r},
              {"s", s},
              {"cem", big_to_json(cem(e, m))},
              {"dem", big_to_json(dem(e, m))},
              {"non_sharp_k", k ? json(*k) : json(nullptr)},
              {"relation_bound", k ? "strict" : "open"}};
  if (e >= 3) out["asymptotic_threshold"] = big_to_json(asymptotic_threshold(e));
  return out;
}

inline std::string monomial_text(const Monomial& u) {
  std::string s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i + 1);
    if (u[i] > 1) s += "^" + std::to_string(u[i]);
  }
  return s.empty() ? "1" : s;
}

inline json betti_json(const BettiTable& t, std::size_t len) {
  json graded = json::array();
  for (const auto& [key, v] : t.entries) graded.push_back({{"i", key.first}, {"j", key.second}, {"value", v}});
  return {{"totals", t.totals(len)}, {"graded", graded}};
}

/// Default Kunz box: 4 for m <= 12, 3 beyond.
inline std::int64_t default_kunz_bound(std::int64_t m) { return m <= 12 ? 4 : 3; }

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical monoids: relations, type and extremal examples", "nm"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string fmt_name = "human";
  app.add_option("--format", fmt_name, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();

  std::vector<std::int64_t> gens;
  auto* inv = app.add_subcommand("invariants", "Invariants of the monoid generated by --gens");
  inv->add_option("--gens", gens, "Generators, comma separated")->delimiter(',')->required();

  std::int64_t e = 0, m = 0;
  auto* bnd = app.add_subcommand("bounds", "cem, dem and the non-sharp predicate for (e, m)");
  bnd->add_option("--e", e)->required();
  bnd->add_option("--m", m)->required();

  std::string target, e_range, delta_range;
  std::int64_t m_max = 0, m_span = 50, span = 10000;
  unsigned jobs = 1;
  auto* ver = app.add_subcommand("verify", "Run a verification target (or 'all')");
  std::vector<std::string> names{"all"};
  for (const auto& t : verify::targets()) {
    names.emplace_back(t.name);
    names.emplace_back(t.alias);
  }
  ver->add_option("target", target)->required()->check(CLI::IsMember(names));
  ver->add_option("--e", e_range, "Range a..b of e");
  ver->add_option("--delta", delta_range, "Range a..b of m - e");
  ver->add_option("--m-max", m_max, "Largest multiplicity / colength");
  ver->add_option("--m-span", m_span, "Multiplicities checked above 2^t")->capture_default_str();
  ver->add_option("--span", span, "Multiplicities checked above the threshold")->capture_default_str();
  ver->add_option("--jobs", jobs, "Accepted for symmetry with search; cells run sequentially");

  std::string m_range, checkpoint;
  std::int64_t kunz_bound = 0;
  auto* sea = app.add_subcommand("search", "Bounded search over Kunz coordinates");
  sea->add_option("--e", e)->required();
  sea->add_option("--m", m_range, "Multiplicity or range a..b")->required();
  sea->add_option("--kunz-bound", kunz_bound, "Largest Kunz coordinate (default 4 for m <= 12, else 3)");
  sea->add_option("--jobs", jobs)->capture_default_str();
  sea->add_option("--checkpoint", checkpoint, "JSON-lines checkpoint file, resumed when present");

  std::int64_t delta = 0;
  auto* fam = app.add_subcommand("family", "Extremal monoid for (e, m)");
  fam->add_option("--e", e)->required();
  fam->add_option("--m", m)->required();

  std::string engine = "ek";
  auto* bet = app.add_subcommand("betti", "Betti numbers of the very compressed lex ideal of colength m");
  bet->add_option("--e", e)->required();
  bet->add_option("--m", m)->required();
  bet->add_option("--engine", engine)->check(CLI::IsMember({"ek", "recursion", "koszul"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& ex) {
    err << ex.what() << '\n' << "run with --help for usage\n";
    return usage;
  }
  const format fmt = fmt_name == "json" ? format::json : fmt_name == "csv" ? format::csv : format::human;

  Document doc;
  Stopwatch total;
  int code = ok;
  try {
    if (inv->parsed()) {
      doc.command = "invariants";
      doc.inputs = {{"gens", gens}};
      doc.results = invariants_json(from_generators(gens));
    } else if (bnd->parsed()) {
      doc.command = "bounds";
      doc.inputs = {{"e", e}, {"m", m}};
      doc.results = bounds_json(e, m);
    } else if (ver->parsed()) {
      doc.command = "verify";
      verify::Options opts;
      if (!e_range.empty()) opts.e = parse_range(e_range);
      if (!delta_range.empty()) opts.delta = parse_range(delta_range);
      opts.m_max = m_max;
      opts.m_span = m_span;
      opts.coverage_span = span;
      doc.inputs = {{"target", target}, {"e", e_range}, {"delta", delta_range}, {"m_max", m_max},
                    {"m_span", m_span}, {"span", span}};
      json rows = json::array();
      std::size_t failed = 0;
      for (const auto& t : verify::targets()) {
        if (target != "all" && target != t.name && target != t.alias) continue;
        Stopwatch sw;
        const auto rep = t.run(opts);
        doc.timings[t.name] = sw.ms();
        for (const auto& c : rep.cells) {
          json row = {{"target", rep.target}, {"cell", c.label}, {"status", c.passed ? "pass" : "FAIL"}};
          if (fmt == format::json || !c.passed) row["data"] = c.data;
          rows.push_back(row);
        }
        failed += rep.failures();
      }
      doc.results = {{"columns", {"target", "cell", "status"}},
                     {"rows", rows},
                     {"cells", rows.size()},
                     {"failed", failed}};
      if (fmt == format::human)
        for (const auto& row : rows)
          if (row["status"] == "FAIL") err << "FAIL " << row["target"].get<std::string>() << ' '
                                          << row["cell"].get<std::string>() << ' ' << row["data"].dump() << '\n';
      code = failed ? verify_failed : ok;
    } else if (sea->parsed()) {
      doc.command = "search";
      const auto mr = parse_range(m_range);
      if (mr.hi < mr.lo) throw error(error_kind::invalid_argument, "empty multiplicity range");
      json rows = json::array();
      bool complete = true;
      for (auto mm = mr.lo; mm <= mr.hi; ++mm) {
        const auto k = kunz_bound > 0 ? kunz_bound : default_kunz_bound(mm);
        if (e < 1 || e >= mm) throw error(error_kind::invalid_argument, "search requires 1 <= e < m");
        SearchOptions opts;
        opts.jobs = jobs;
        opts.stop = &stop_requested;
        std::ofstream ck;
        if (!checkpoint.empty()) {
          opts.completed = load_checkpoint(checkpoint, e, mm, k);
          ck.open(checkpoint, std::ios::app);
          if (!ck) throw error(error_kind::invalid_argument, "cannot open checkpoint " + checkpoint);
          opts.on_unit_done = [&](const KunzPrefix& p, const SearchTally& t) {
            ck << checkpoint_record(e, mm, k, p, t) << '\n';
            ck.flush();
          };
        }
        Stopwatch sw;
        const auto res = max_invariants(e, mm, k, std::move(opts));
        doc.timings["m=" + std::to_string(mm)] = sw.ms();
        rows.push_back(search_result_to_json(res));
        complete = complete && res.exhausted;
      }
      doc.inputs = {{"e", e}, {"m", m_range}, {"kunz_bound", kunz_bound}, {"jobs", jobs}, {"checkpoint", checkpoint}};
      if (rows.size() == 1 && fmt != format::csv) {
        doc.results = rows.front();
      } else {
        doc.results = {{"columns", {"e", "m", "cem", "dem", "best_rho", "best_type", "kunz_bound", "exhausted"}},
                       {"rows", rows}};
      }
      if (!complete && stop_requested) code = interrupted;
    } else if (fam->parsed()) {
      doc.command = "family";
      doc.inputs = {{"e", e}, {"m", m}};
      delta = m - e;
      const auto g = delta >= 1 && delta <= 6 ? sharp_family_small_delta(e, delta) : sharp_family_large_m(e, m);
      const auto r = verify_sharp(g, e, m);
      doc.results = {{"family", delta <= 6 ? "small-delta" : "power-of-two"},
                     {"generators", g.generators()},
                     {"mult", g.multiplicity()},
                     {"edim", g.edim()},
                     {"apery_unique", r.apery_unique},
                     {"rho", r.rho_graph},
                     {"cem", big_to_json(r.cem)},
                     {"type", r.type},
                     {"dem", big_to_json(r.dem)},
                     {"sharp", r.passed()}};
    } else if (bet->parsed()) {
      doc.command = "betti";
      doc.inputs = {{"e", e}, {"m", m}, {"engine", engine}};
      if (e < 1 || m < 1) throw error(error_kind::invalid_argument, "betti requires e, m >= 1");
      const auto ue = static_cast<std::size_t>(e);
      const auto ideal = very_compressed_lex(ue, m);
      json gens_out = json::array();
      for (const auto& u : ideal.min_gens()) gens_out.push_back(monomial_text(u));
      doc.results = {{"generators", gens_out}, {"hilbert_function", hilbert_function(ideal).values}};
      if (engine == "recursion")
        doc.results["totals"] = betti_recursion(ideal);
      else
        doc.results.update(betti_json(engine == "ek" ? ek_betti(ideal) : koszul_betti(ideal), ue));
    }
  } catch (const error& ex) {
    err << "error: " << ex.what() << '\n';
    return ex.kind() == error_kind::resource_limit || ex.kind() == error_kind::not_certified ? resource_cap : usage;
  }
  doc.timings["total"] = total.ms();
  render(doc, fmt, out);
  return code;
}

}  // namespace nm::cli
