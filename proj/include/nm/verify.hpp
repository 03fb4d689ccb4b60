#pragma once

// Batch checks of the extremal statements, one cell per parameter choice.
// Each runner returns every cell with its pass flag and a JSON payload of
// the computed values, so failures carry their counterexample.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nm/arith.hpp"
#include "nm/constructions.hpp"
#include "nm/ideals/koszul.hpp"
#include "nm/ideals/lex_plus_powers.hpp"
#include "nm/ideals/monomial.hpp"
#include "nm/monoid.hpp"
#include "nm/presentation.hpp"
#include "nm/serialize.hpp"
#include "nm/sumset.hpp"

namespace nm::verify {

struct Cell {
  std::string label;
  bool passed = false;
  nlohmann::json data;
};

struct Report {
  std::string target;
  std::vector<Cell> cells;

  [[nodiscard]] bool passed() const {
    return std::all_of(cells.begin(), cells.end(), [](const Cell& c) { return c.passed; });
  }
  [[nodiscard]] std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return !c.passed; }));
  }
};

struct Range {
  std::int64_t lo = 0, hi = -1;
};

/// Parameters shared by the runners; each runner reads the ones it uses.
struct Options {
  Range e{0, -1};           // empty means the runner's default
  Range delta{0, -1};
  std::int64_t m_max = 0;   // 0: default
  std::int64_t m_span = 50;
  std::int64_t coverage_span = 10000;
};

inline Range or_default(Range r, Range d) { return r.hi < r.lo ? d : r; }

inline std::string cell_label(std::initializer_list<std::pair<const char*, std::int64_t>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) {
    if (!s.empty()) s += ' ';
    s += std::string(k) + '=' + std::to_string(v);
  }
  return s;
}

/// Six families with m - e <= 6: structure, Apery list and rho.
inline Report small_delta_families(const Options& o = {}) {
  static constexpr std::int64_t excess[] = {0, 0, 0, 1, 1, 2};
  Report rep{"small-gap", {}};
  const auto er = or_default(o.e, {3, 12});
  const auto dr = or_default(o.delta, {1, 6});
  for (auto e = er.lo; e <= er.hi; ++e)
    for (auto d = dr.lo; d <= dr.hi; ++d) {
      Cell c{cell_label({{"e", e}, {"delta", d}}), false, {}};
      const auto g = from_generators(small_delta_generator_list(e, d));
      const auto r = verify_sharp(g, e, e + d);
      const auto ap = apery_set(g).elements;
      const auto expected_ap = small_delta_apery_list(e, d);
      const BigInt expected_rho = binom(e + 1, 2) + excess[d - 1];
      c.data = {{"generators", g.generators()},
                {"mult", g.multiplicity()},
                {"edim", g.edim()},
                {"apery_matches", ap == expected_ap},
                {"apery_unique", r.apery_unique},
                {"rho_graph", r.rho_graph},
                {"rho_apery", r.rho_rosales ? nlohmann::json(*r.rho_rosales) : nlohmann::json(nullptr)},
                {"cem", big_to_json(r.cem)},
                {"type", r.type},
                {"dem", big_to_json(r.dem)}};
      c.passed = r.passed() && ap == expected_ap && r.cem == expected_rho;
      rep.cells.push_back(std::move(c));
    }
  return rep;
}

/// Power-of-two family: delta in [2, 9], m in [2^t, 2^t + span].
inline Report power_of_two_family(const Options& o = {}) {
  Report rep{"power-of-two", {}};
  const auto dr = or_default(o.delta, {2, 9});
  for (auto d = dr.lo; d <= dr.hi; ++d) {
    const auto [delta, t, q] = tq_decompose(d);
    for (auto m = std::int64_t{1} << t; m <= (std::int64_t{1} << t) + o.m_span; ++m) {
      const auto e = m - d;
      Cell c{cell_label({{"delta", d}, {"m", m}}), false, {}};
      const auto g = sharp_family_large_m(e, m);
      const auto r = verify_sharp(g, e, m);
      const auto ap = apery_set(g).elements;
      const auto max_ap = *std::max_element(ap.begin(), ap.end());
      const auto expected_max = 2 * m + (std::int64_t{1} << (t - 1)) + (std::int64_t{1} << (t - q - 1)) - 2;
      c.data = {{"e", e},
                {"t", t},
                {"q", q},
                {"edim", g.edim()},
                {"apery_unique", r.apery_unique},
                {"rho_graph", r.rho_graph},
                {"rho_apery", r.rho_rosales ? nlohmann::json(*r.rho_rosales) : nlohmann::json(nullptr)},
                {"cem", big_to_json(r.cem)},
                {"max_apery", max_ap}};
      c.passed = r.passed() && max_ap == expected_max;
      rep.cells.push_back(std::move(c));
    }
  }
  return rep;
}

/// beta_0 and beta_{e-1} of the very compressed lex ideal against cem and dem.
inline Report compressed_extremes(const Options& o = {}) {
  Report rep{"compressed-extremes", {}};
  const auto er = or_default(o.e, {2, 6});
  const auto m_max = o.m_max > 0 ? o.m_max : 60;
  for (auto e = er.lo; e <= er.hi; ++e)
    for (auto m = e + 1; m <= m_max; ++m) {
      Cell c{cell_label({{"e", e}, {"m", m}}), false, {}};
      const auto totals = ek_betti(very_compressed_lex(static_cast<std::size_t>(e), m)).totals(static_cast<std::size_t>(e));
      const auto ce = cem(e, m), de = dem(e, m);
      c.data = {{"betti", totals}, {"cem", big_to_json(ce)}, {"dem", big_to_json(de)}};
      c.passed = BigInt(totals.front()) == ce && BigInt(totals.back()) == de;
      rep.cells.push_back(std::move(c));
    }
  return rep;
}

/// Hyperplane recursion against Eliahou-Kervaire on every lex ideal.
inline Report recursion_matches_ek(const Options& o = {}) {
  Report rep{"recursion", {}};
  const auto er = or_default(o.e, {1, 5});
  const auto m_max = o.m_max > 0 ? o.m_max : 25;
  for (auto e = er.lo; e <= er.hi; ++e)
    for (std::int64_t n = 1; n <= m_max; ++n) {
      Cell c{cell_label({{"e", e}, {"colength", n}}), true, {}};
      std::int64_t count = 0;
      for (const auto& lex : enumerate_lex_ideals(static_cast<std::size_t>(e), n)) {
        ++count;
        const auto ek = ek_betti(lex).totals(static_cast<std::size_t>(e));
        const auto rec = betti_recursion(lex);
        if (ek != rec) {
          c.passed = false;
          c.data["counterexample"] = {{"hilbert_function", hilbert_function(lex).values}, {"ek", ek}, {"recursion", rec}};
          break;
        }
      }
      c.data["ideals"] = count;
      rep.cells.push_back(std::move(c));
    }
  return rep;
}

/// Lex ideals with maximal beta_0 have all Betti totals maximal.
inline Report rigidity(const Options& o = {}) {
  Report rep{"rigidity", {}};
  const auto er = or_default(o.e, {2, 5});
  for (auto e = er.lo; e <= er.hi; ++e) {
    const auto m_max = o.m_max > 0 ? o.m_max : e + 9;
    for (std::int64_t m = 2; m <= m_max; ++m) {
      Cell c{cell_label({{"e", e}, {"m", m}}), true, {}};
      const auto ref = ek_betti(very_compressed_lex(static_cast<std::size_t>(e), m)).totals(static_cast<std::size_t>(e));
      std::int64_t count = 0, rigid = 0;
      for (const auto& lex : enumerate_lex_ideals(static_cast<std::size_t>(e), m)) {
        ++count;
        const auto b = ek_betti(lex).totals(static_cast<std::size_t>(e));
        if (b.front() != ref.front()) continue;
        ++rigid;
        if (b != ref) {
          c.passed = false;
          c.data["counterexample"] = {{"hilbert_function", hilbert_function(lex).values}, {"betti", b}};
        }
      }
      c.data["ideals"] = count;
      c.data["beta0_maximal"] = rigid;
      c.data["reference"] = ref;
      rep.cells.push_back(std::move(c));
    }
  }
  return rep;
}

/// Lex ideals of colength e + 7 other than the compressed one have strictly
/// smaller Betti totals in every homological degree.
inline Report lex_strict_drop(const Options& o = {}) {
  Report rep{"lex-strict-drop", {}};
  const auto er = or_default(o.e, {4, 5});
  for (auto e = er.lo; e <= er.hi; ++e) {
    const auto m = e + 7;
    const auto ue = static_cast<std::size_t>(e);
    const auto compressed = very_compressed_lex(ue, m);
    const auto ref_hf = hilbert_function(compressed);
    const auto ref = ek_betti(compressed).totals(ue);
    Cell c{cell_label({{"e", e}, {"m", m}}), true, {}};
    std::int64_t count = 0, compared = 0;
    for (const auto& lex : enumerate_lex_ideals(ue, m)) {
      ++count;
      if (hilbert_function(lex) == ref_hf) continue;
      ++compared;
      const auto b = ek_betti(lex).totals(ue);
      for (std::size_t i = 0; i < ue; ++i)
        if (b[i] >= ref[i]) {
          c.passed = false;
          c.data["counterexample"] = {{"hilbert_function", hilbert_function(lex).values}, {"betti", b}};
        }
    }
    c.data["ideals"] = count;
    c.data["compared"] = compared;
    c.data["reference"] = ref;
    rep.cells.push_back(std::move(c));
  }
  return rep;
}

/// beta_2 of (x1^2) + m^4 in three variables equals beta_2 of c(16).
inline Report mixed_ideal_beta2(const Options& = {}) {
  Report rep{"mixed-beta2", {}};
  std::vector<Monomial> gens{variable(3, 0, 2)};
  for (auto& u : monomials_of_degree(3, 4)) gens.push_back(std::move(u));
  const MonomialIdeal ideal(3, std::move(gens));
  const auto koszul = koszul_betti(ideal).totals(3);
  const auto compressed = ek_betti(very_compressed_lex(3, 16)).totals(3);
  Cell c{"ideal=(x1^2)+m^4 nvars=3", false, {}};
  c.data = {{"colength", colength(ideal)}, {"betti", koszul}, {"compressed_betti", compressed}};
  c.passed = colength(ideal) == 16 && koszul[2] == 7 && compressed[2] == 7;
  rep.cells.push_back(std::move(c));
  return rep;
}

/// Every (e+1)-subset A of Z/mZ containing 0 has |kA| < C(e+k, k) whenever
/// m < C(e+k-1, k-1) + e C(e+k-2, k-1).
inline Report sumset_bound(const Options& o = {}) {
  Report rep{"sumset-bound", {}};
  const auto m_max = o.m_max > 0 ? o.m_max : 13;
  const auto er = or_default(o.e, {2, 3});
  for (std::int64_t m = 2; m <= m_max; ++m)
    for (auto e = er.lo; e <= er.hi; ++e)
      for (std::int64_t k = 2; k <= 3; ++k) {
        if (e + 1 > m || !sumset_bound_applies(e, m, k)) continue;
        const auto bound = binom(e + k, k);
        Cell c{cell_label({{"m", m}, {"e", e}, {"k", k}}), true, {}};
        std::int64_t subsets = 0, largest = 0;
        std::vector<std::int64_t> pick{0};
        std::function<void(std::int64_t)> rec = [&](std::int64_t from) {
          if (static_cast<std::int64_t>(pick.size()) == e + 1) {
            ++subsets;
            const auto sz = k_fold_sumset(ModularSubset(m, pick), k).size();
            largest = std::max(largest, sz);
            if (BigInt(sz) >= bound && c.passed) {
              c.passed = false;
              c.data["counterexample"] = pick;
            }
            return;
          }
          for (auto a = from; a < m; ++a) {
            pick.push_back(a);
            rec(a + 1);
            pick.pop_back();
          }
        };
        rec(1);
        c.data["subsets"] = subsets;
        c.data["largest_sumset"] = largest;
        c.data["bound"] = big_to_json(bound);
        rep.cells.push_back(std::move(c));
      }
  return rep;
}

/// The lex-plus-powers ideal with e - 2 squares and the Hilbert function of
/// c(e + 7) has strictly smaller Betti totals than c(e + 7).
inline Report lex_plus_powers_drop(const Options& o = {}) {
  Report rep{"lex-plus-powers", {}};
  const auto er = or_default(o.e, {4, 5});
  for (auto e = er.lo; e <= er.hi; ++e) {
    const auto ue = static_cast<std::size_t>(e);
    const auto compressed = very_compressed_lex(ue, e + 7);
    const auto ref = ek_betti(compressed).totals(ue);
    Cell c{cell_label({{"e", e}, {"m", e + 7}}), false, {}};
    const auto h = lex_plus_powers(ue, std::vector<std::int64_t>(ue - 2, 2), hilbert_function(compressed));
    const auto b = koszul_betti(h).totals(ue);
    c.passed = true;
    for (std::size_t i = 0; i < ue; ++i)
      if (b[i] >= ref[i]) c.passed = false;
    c.data = {{"betti", b}, {"compressed_betti", ref}};
    rep.cells.push_back(std::move(c));
  }
  return rep;
}

/// Large multiplicities are never sharp: [threshold, threshold + span] lies
/// inside the non-sharp regions.
inline Report threshold_coverage(const Options& o = {}) {
  Report rep{"threshold-coverage", {}};
  const auto er = or_default(o.e, {3, 5});
  for (auto e = er.lo; e <= er.hi; ++e) {
    const auto lo = to_i64(asymptotic_threshold(e));
    Cell c{cell_label({{"e", e}}), true, {}};
    std::int64_t misses = 0;
    for (auto m = lo; m <= lo + o.coverage_span; ++m)
      if (!not_sharp_region(e, m)) {
        if (misses++ == 0) c.data["first_miss"] = m;
        c.passed = false;
      }
    c.data["threshold"] = lo;
    c.data["span"] = o.coverage_span;
    c.data["misses"] = misses;
    rep.cells.push_back(std::move(c));
  }
  return rep;
}

/// Type of <11, 12, 14, 15, 20> is one below the bound.
inline Report type_deficit(const Options& = {}) {
  Report rep{"type-deficit", {}};
  const auto g = from_generators({11, 12, 14, 15, 20});
  const auto t = type(g);
  const auto d = dem(4, 11);
  Cell c{"gens=11,12,14,15,20", BigInt(t) == d - 1 && t == 6, {}};
  c.data = {{"type", t}, {"dem", big_to_json(d)}, {"pseudo_frobenius", pseudo_frobenius(g)}};
  rep.cells.push_back(std::move(c));
  return rep;
}

struct Target {
  const char* name;
  const char* alias;  // short id also accepted on the command line
  Report (*run)(const Options&);
};

inline const std::vector<Target>& targets() {
  static const std::vector<Target> all{
      {"small-gap", "thm-3.3", small_delta_families},
      {"power-of-two", "thm-3.2", power_of_two_family},
      {"compressed-extremes", "prop-2.2", compressed_extremes},
      {"recursion", "prop-2.4", recursion_matches_ek},
      {"rigidity", "prop-2.7", rigidity},
      {"lex-strict-drop", "lemma-2.8", lex_strict_drop},
      {"mixed-beta2", "remark-2.6", mixed_ideal_beta2},
      {"sumset-bound", "lemma-4.1", sumset_bound},
      {"lex-plus-powers", "prop-4.6-betti", lex_plus_powers_drop},
      {"threshold-coverage", "thm-4.4", threshold_coverage},
      {"type-deficit", "prop-5.3", type_deficit},
  };
  return all;
}

}  // namespace nm::verify
