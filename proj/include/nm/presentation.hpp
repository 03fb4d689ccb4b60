#pragma once

// Factorizations, factorization graphs and the cardinality of a minimal
// presentation of a numerical monoid.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nm/error.hpp"
#include "nm/monoid.hpp"

namespace nm {

using ExponentVector = std::vector<std::int64_t>;

/// Coefficients over all minimal generators g0..ge, with the value they represent.
struct Factorization {
  ExponentVector coords;
  std::int64_t value = 0;

  friend bool operator==(const Factorization&, const Factorization&) = default;
  friend auto operator<=>(const Factorization& a, const Factorization& b) { return a.coords <=> b.coords; }
};

/// Coefficients over the non-multiplicity generators g1..ge only.
using AperyFactorization = ExponentVector;

enum class rho_method { graph, unique_factorization };

inline const char* to_string(rho_method m) {
  return m == rho_method::graph ? "graph" : "unique-factorization";
}

struct BettiElement {
  std::int64_t value = 0;
  std::int64_t components = 0;

  friend bool operator==(const BettiElement&, const BettiElement&) = default;
};

struct PresentationReport {
  std::int64_t rho = 0;
  std::vector<BettiElement> betti_elements;  // graph method only
  rho_method method = rho_method::graph;
  std::vector<AperyFactorization> minimal_elements;  // unique-factorization method only
};

namespace detail {

// Visits every vector a over `gens` with 0 < sum a_i gens_i <= bound.  The
// callback receives the value and the current coefficient vector.
template <class Visit>
void for_each_vector_upto(std::span<const std::int64_t> gens, std::int64_t bound, Visit&& visit) {
  ExponentVector coords(gens.size(), 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t value) {
    if (i == gens.size()) {
      if (value > 0) visit(value, static_cast<const ExponentVector&>(coords));
      return;
    }
    for (std::int64_t c = 0; value + c * gens[i] <= bound; ++c) {
      coords[i] = c;
      rec(i + 1, value + c * gens[i]);
    }
    coords[i] = 0;
  };
  rec(0, 0);
}

}  // namespace detail

/// All factorizations of n, lexicographically ordered by coordinates.
inline std::vector<Factorization> factorizations(const NumericalMonoid& g, std::int64_t n) {
  std::vector<Factorization> out;
  if (n < 0) return out;
  const auto& gens = g.generators();
  ExponentVector coords(gens.size(), 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t rest) {
    if (i + 1 == gens.size()) {
      if (rest % gens[i] == 0) {
        coords[i] = rest / gens[i];
        out.push_back({coords, n});
        coords[i] = 0;
      }
      return;
    }
    for (std::int64_t c = 0; c * gens[i] <= rest; ++c) {
      coords[i] = c;
      rec(i + 1, rest - c * gens[i]);
    }
    coords[i] = 0;
  };
  rec(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

/// Sums (components - 1) of the factorization graphs of every n <= bound,
/// where two factorizations are adjacent when their supports meet.
inline PresentationReport rho_with_bound(const NumericalMonoid& g, std::int64_t bound) {
  PresentationReport report;
  report.method = rho_method::graph;
  const auto& gens = g.generators();
  const std::size_t width = gens.size();
  if (bound < 2) return report;

  const auto slots = static_cast<std::size_t>(bound + 1);
  std::vector<std::uint32_t> parent(slots * width);
  std::vector<char> seen(slots * width, 0);
  for (std::size_t v = 0; v < slots; ++v)
    for (std::size_t i = 0; i < width; ++i) parent[v * width + i] = static_cast<std::uint32_t>(i);

  auto find = [&](std::size_t base, std::uint32_t x) {
    while (parent[base + x] != x) x = parent[base + x] = parent[base + parent[base + x]];
    return x;
  };

  detail::for_each_vector_upto(gens, bound, [&](std::int64_t value, const ExponentVector& a) {
    const std::size_t base = static_cast<std::size_t>(value) * width;
    std::uint32_t first = static_cast<std::uint32_t>(width);
    for (std::size_t i = 0; i < width; ++i) {
      if (a[i] == 0) continue;
      seen[base + i] = 1;
      const auto idx = static_cast<std::uint32_t>(i);
      if (first == width)
        first = idx;
      else
        parent[base + find(base, idx)] = find(base, first);
    }
  });

  for (std::int64_t v = 2; v <= bound; ++v) {
    const std::size_t base = static_cast<std::size_t>(v) * width;
    std::int64_t components = 0;
    for (std::size_t i = 0; i < width; ++i)
      if (seen[base + i] && find(base, static_cast<std::uint32_t>(i)) == i) ++components;
    if (components > 1) {
      report.betti_elements.push_back({v, components});
      report.rho += components - 1;
    }
  }
  return report;
}

/// Candidate bound for Betti elements: F + g0 + ge.  Beyond it every
/// factorization graph is connected through g0.
inline std::int64_t betti_candidate_bound(const NumericalMonoid& g) {
  const auto f = frobenius(g).value_or(-1);
  return f + g.generators().front() + g.generators().back();
}

inline PresentationReport rho(const NumericalMonoid& g) { return rho_with_bound(g, betti_candidate_bound(g)); }

/// Minimal elements of N^dim minus a finite down-set.
/// Throws error_kind::not_a_downset when `downset` is not downward closed.
inline std::vector<ExponentVector> min_elements_of_upset_complement(const std::vector<ExponentVector>& downset,
                                                                    std::size_t dim) {
  std::set<ExponentVector> d;
  for (const auto& v : downset) {
    if (v.size() != dim) throw error(error_kind::invalid_argument, "vector of wrong dimension");
    if (std::any_of(v.begin(), v.end(), [](auto x) { return x < 0; }))
      throw error(error_kind::invalid_argument, "negative coordinate");
    d.insert(v);
  }
  if (d.empty()) return {ExponentVector(dim, 0)};

  for (const auto& v : d) {
    for (std::size_t i = 0; i < dim; ++i) {
      if (v[i] == 0) continue;
      auto w = v;
      --w[i];
      if (!d.count(w)) throw error(error_kind::not_a_downset, "predecessor of a member is missing");
    }
  }

  std::set<ExponentVector> out;
  for (const auto& v : d) {
    for (std::size_t i = 0; i < dim; ++i) {
      auto c = v;
      ++c[i];
      if (d.count(c)) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < dim && minimal; ++j) {
        if (c[j] == 0) continue;
        auto w = c;
        --w[j];
        minimal = d.count(w) > 0;
      }
      if (minimal) out.insert(std::move(c));
    }
  }
  return {out.begin(), out.end()};
}

/// All factorizations over g1..ge of the Apery elements, indexed by Apery
/// element.  These vectors form a down-set of N^e.
inline std::vector<std::pair<std::int64_t, std::vector<AperyFactorization>>> apery_factorizations(
    const NumericalMonoid& g) {
  const auto& gens = g.generators();
  const std::int64_t m = g.multiplicity();
  const std::size_t e = gens.size() - 1;
  auto in_apery = [&](std::int64_t v) { return g.contains(v) && !g.contains(v - m); };

  std::vector<std::pair<std::int64_t, std::vector<AperyFactorization>>> out;
  for (auto w : apery_set(g).elements) out.push_back({w, {}});
  auto slot = [&](std::int64_t w) -> std::vector<AperyFactorization>& {
    return std::lower_bound(out.begin(), out.end(), w,
                            [](const auto& p, std::int64_t x) { return p.first < x; })->second;
  };

  AperyFactorization coords(e, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t value) {
    if (i == e) {
      slot(value).push_back(coords);
      return;
    }
    // Leaving the Apery set is permanent: its complement in the monoid is an up-set.
    for (std::int64_t c = 0; in_apery(value + c * gens[i + 1]); ++c) {
      coords[i] = c;
      rec(i + 1, value + c * gens[i + 1]);
    }
    coords[i] = 0;
  };
  rec(0, 0);
  return out;
}

/// Number of relations via minimal elements of {a : sum a_i g_i not in Ap},
/// valid when every Apery element has a unique factorization.
/// Throws error_kind::hypothesis_violated otherwise.
inline PresentationReport rho_unique_factorization(const NumericalMonoid& g) {
  std::vector<ExponentVector> downset;
  for (auto& [w, facts] : apery_factorizations(g)) {
    if (facts.size() != 1)
      throw error(error_kind::hypothesis_violated,
                  "Apery element " + std::to_string(w) + " has " + std::to_string(facts.size()) + " factorizations");
    downset.push_back(std::move(facts.front()));
  }
  PresentationReport report;
  report.method = rho_method::unique_factorization;
  report.minimal_elements = min_elements_of_upset_complement(downset, static_cast<std::size_t>(g.e()));
  report.rho = static_cast<std::int64_t>(report.minimal_elements.size());
  return report;
}

/// True when every Apery element has exactly one factorization.
inline bool apery_unique_factorization(const NumericalMonoid& g) {
  const auto facts = apery_factorizations(g);
  return std::all_of(facts.begin(), facts.end(), [](const auto& p) { return p.second.size() == 1; });
}

/// All kernel pairs (a, b) of the factorization morphism with a < b and
/// common value at most `bound`.
inline std::vector<std::pair<Factorization, Factorization>> kernel_congruence_oracle(const NumericalMonoid& g,
                                                                                      std::int64_t bound) {
  if (bound < 1) throw error(error_kind::invalid_argument, "bound must be positive");
  std::vector<std::pair<Factorization, Factorization>> out;
  for (std::int64_t n = 1; n <= bound; ++n) {
    const auto fs = factorizations(g, n);
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = i + 1; j < fs.size(); ++j) out.emplace_back(fs[i], fs[j]);
  }
  return out;
}

}  // namespace nm
