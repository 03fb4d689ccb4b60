#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nm/error.hpp"

namespace nm {

/// The m elements w of the monoid with w - m outside it, sorted.
struct AperySet {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> elements;

  friend bool operator==(const AperySet&, const AperySet&) = default;
};

namespace detail {

inline constexpr std::int64_t unreachable = std::numeric_limits<std::int64_t>::max();

// Least element of <gens> in each residue class mod gens[0] (shortest paths
// on the residue graph).  Classes not reached hold `unreachable`.
inline std::vector<std::int64_t> residue_minima(std::span<const std::int64_t> gens) {
  const std::int64_t m = gens.front();
  std::vector<std::int64_t> dist(static_cast<std::size_t>(m), unreachable);
  using item = std::pair<std::int64_t, std::int64_t>;
  std::priority_queue<item, std::vector<item>, std::greater<>> pq;
  dist[0] = 0;
  pq.emplace(0, 0);
  while (!pq.empty()) {
    auto [d, r] = pq.top();
    pq.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (std::size_t i = 1; i < gens.size(); ++i) {
      const std::int64_t nd = d + gens[i];
      const auto nr = static_cast<std::size_t>(nd % m);
      if (nd < dist[nr]) {
        dist[nr] = nd;
        pq.emplace(nd, static_cast<std::int64_t>(nr));
      }
    }
  }
  return dist;
}

}  // namespace detail

/// A numerical monoid, stored by its minimal generators g0 < g1 < ... < ge
/// together with its Apery set with respect to the multiplicity g0.
/// Immutable after construction, so safe to share across threads.
class NumericalMonoid {
 public:
  /// Normalizes `raw` to the unique minimal generating set.
  /// Throws error_kind::not_a_monoid on empty input, nonpositive entries or gcd != 1.
  static NumericalMonoid from_generators(std::span<const std::int64_t> raw) {
    if (raw.empty()) throw error(error_kind::not_a_monoid, "empty generator list");
    std::vector<std::int64_t> sorted(raw.begin(), raw.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.front() <= 0) throw error(error_kind::not_a_monoid, "generators must be positive");
    std::int64_t g = 0;
    for (auto v : sorted) g = std::gcd(g, v);
    if (g != 1) throw error(error_kind::not_a_monoid, "gcd of generators is " + std::to_string(g));

    std::vector<std::int64_t> kept{sorted.front()};
    auto minima = detail::residue_minima(kept);
    const std::int64_t m = kept.front();
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      const std::int64_t v = sorted[i];
      if (minima[static_cast<std::size_t>(v % m)] <= v) continue;  // v is a combination of smaller ones
      kept.push_back(v);
      minima = detail::residue_minima(kept);
    }
    return NumericalMonoid(std::move(kept), std::move(minima));
  }

  static NumericalMonoid from_generators(std::initializer_list<std::int64_t> raw) {
    return from_generators(std::span<const std::int64_t>(raw.begin(), raw.size()));
  }

  [[nodiscard]] const std::vector<std::int64_t>& generators() const noexcept { return gens_; }
  [[nodiscard]] std::int64_t multiplicity() const noexcept { return gens_.front(); }
  [[nodiscard]] std::int64_t edim() const noexcept { return static_cast<std::int64_t>(gens_.size()); }
  /// e, the number of non-multiplicity generators.
  [[nodiscard]] std::int64_t e() const noexcept { return edim() - 1; }

  /// Apery element of residue class r mod m.
  [[nodiscard]] std::int64_t apery_of_residue(std::int64_t r) const {
    return by_residue_[static_cast<std::size_t>(r)];
  }
  [[nodiscard]] const std::vector<std::int64_t>& apery_by_residue() const noexcept { return by_residue_; }

  [[nodiscard]] bool contains(std::int64_t n) const noexcept {
    if (n < 0) return false;
    return n >= by_residue_[static_cast<std::size_t>(n % multiplicity())];
  }

  friend bool operator==(const NumericalMonoid& a, const NumericalMonoid& b) { return a.gens_ == b.gens_; }

 private:
  NumericalMonoid(std::vector<std::int64_t> gens, std::vector<std::int64_t> by_residue)
      : gens_(std::move(gens)), by_residue_(std::move(by_residue)) {}

  std::vector<std::int64_t> gens_;
  std::vector<std::int64_t> by_residue_;
};

inline NumericalMonoid from_generators(std::span<const std::int64_t> raw) {
  return NumericalMonoid::from_generators(raw);
}

inline NumericalMonoid from_generators(std::initializer_list<std::int64_t> raw) {
  return NumericalMonoid::from_generators(raw);
}

inline bool contains(const NumericalMonoid& g, std::int64_t n) { return g.contains(n); }

inline AperySet apery_set(const NumericalMonoid& g) {
  AperySet out{g.multiplicity(), g.apery_by_residue()};
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

/// Largest integer outside the monoid; nullopt for the monoid N = <1>.
inline std::optional<std::int64_t> frobenius(const NumericalMonoid& g) {
  if (g.multiplicity() == 1) return std::nullopt;
  const auto& ap = g.apery_by_residue();
  return *std::max_element(ap.begin(), ap.end()) - g.multiplicity();
}

inline std::vector<std::int64_t> gaps(const NumericalMonoid& g) {
  std::vector<std::int64_t> out;
  const auto f = frobenius(g);
  if (!f) return out;
  for (std::int64_t n = 1; n <= *f; ++n)
    if (!g.contains(n)) out.push_back(n);
  return out;
}

/// Apery elements maximal for w <= w' iff w' - w in the monoid.
inline std::vector<std::int64_t> maximal_apery_elements(const NumericalMonoid& g) {
  const auto ap = apery_set(g).elements;
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < ap.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < ap.size() && maximal; ++j)
      if (g.contains(ap[j] - ap[i])) maximal = false;
    if (maximal) out.push_back(ap[i]);
  }
  return out;
}

/// Gaps p with p + g in the monoid for every nonzero g.  Empty for N.
inline std::vector<std::int64_t> pseudo_frobenius(const NumericalMonoid& g) {
  std::vector<std::int64_t> out;
  if (g.multiplicity() == 1) return out;
  for (auto w : maximal_apery_elements(g)) out.push_back(w - g.multiplicity());
  return out;
}

inline std::int64_t type(const NumericalMonoid& g) {
  return static_cast<std::int64_t>(pseudo_frobenius(g).size());
}

}  // namespace nm
