#pragma once

// Bounded exhaustive search over numerical monoids of fixed multiplicity,
// parametrized by Kunz coordinates: the Apery element of residue i is
// k_i * m + i.  Results are lower bounds for the maximal number of relations
// and the maximal type over all monoids with the given (e, m).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "nm/arith.hpp"
#include "nm/error.hpp"
#include "nm/monoid.hpp"
#include "nm/presentation.hpp"

namespace nm {

/// Kunz coordinates k_1..k_{m-1} (coords[i-1] = k_i).
struct KunzVector {
  std::int64_t modulus = 2;
  std::vector<std::int64_t> coords;

  friend bool operator==(const KunzVector&, const KunzVector&) = default;
  friend auto operator<=>(const KunzVector&, const KunzVector&) = default;
};

/// k_i + k_j >= k_{i+j} for i + j < m and k_i + k_j + 1 >= k_{i+j-m} for i + j > m.
inline bool is_valid_kunz(const KunzVector& v) {
  const std::int64_t m = v.modulus;
  if (m < 2 || static_cast<std::int64_t>(v.coords.size()) != m - 1) return false;
  auto k = [&](std::int64_t i) { return v.coords[static_cast<std::size_t>(i - 1)]; };
  for (std::int64_t i = 1; i < m; ++i) {
    if (k(i) < 1) return false;
    for (std::int64_t j = i; j < m; ++j) {
      if (i + j < m && k(i) + k(j) < k(i + j)) return false;
      if (i + j > m && k(i) + k(j) + 1 < k(i + j - m)) return false;
    }
  }
  return true;
}

inline KunzVector kunz_of(const NumericalMonoid& g) {
  const std::int64_t m = g.multiplicity();
  KunzVector v{m, {}};
  for (std::int64_t i = 1; i < m; ++i) v.coords.push_back(g.apery_of_residue(i) / m);
  return v;
}

/// Minimal generators read off a valid Kunz vector: m together with the
/// nonzero Apery elements that are not sums of two nonzero Apery elements.
inline std::vector<std::int64_t> kunz_generators(const KunzVector& v) {
  const std::int64_t m = v.modulus;
  auto ap = [&](std::int64_t i) { return v.coords[static_cast<std::size_t>(i - 1)] * m + i; };
  std::vector<std::int64_t> gens{m};
  for (std::int64_t r = 1; r < m; ++r) {
    bool minimal = true;
    for (std::int64_t i = 1; i < m && minimal; ++i) {
      const std::int64_t j = ((r - i) % m + m) % m;
      if (j == 0) continue;
      if (ap(i) + ap(j) == ap(r)) minimal = false;
    }
    if (minimal) gens.push_back(ap(r));
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

inline NumericalMonoid monoid_of(const KunzVector& v) {
  if (!is_valid_kunz(v)) throw error(error_kind::invalid_argument, "not a valid Kunz vector");
  return from_generators(kunz_generators(v));
}

namespace detail {

// Depth-first extension of a Kunz prefix; every constraint whose indices are
// all assigned is checked as soon as its largest index is assigned.
template <class Visit>
void extend_kunz(std::int64_t m, std::int64_t bound, std::vector<std::int64_t>& coords, Visit&& visit) {
  const auto assigned = static_cast<std::int64_t>(coords.size());
  if (assigned == m - 1) {
    visit(static_cast<const std::vector<std::int64_t>&>(coords));
    return;
  }
  const std::int64_t c = assigned + 1;  // index being assigned
  auto k = [&](std::int64_t i) { return coords[static_cast<std::size_t>(i - 1)]; };
  for (std::int64_t val = 1; val <= bound; ++val) {
    coords.push_back(val);
    bool ok = true;
    for (std::int64_t i = 1; i < c && ok; ++i) {
      const std::int64_t j = c - i;  // i + j = c
      if (j >= i && k(i) + k(j) < val) ok = false;
      if (ok && i + c > m && k(i) + val + 1 < k(i + c - m)) ok = false;
    }
    if (ok && 2 * c > m && 2 * val + 1 < k(2 * c - m)) ok = false;
    if (ok) extend_kunz(m, bound, coords, visit);
    coords.pop_back();
  }
}

}  // namespace detail

/// Visits every valid Kunz vector of modulus m with coordinates in [1, K].
template <class Visit>
void for_each_kunz(std::int64_t m, std::int64_t bound, Visit&& visit) {
  if (m < 2 || bound < 1) throw error(error_kind::invalid_argument, "for_each_kunz requires m >= 2, K >= 1");
  std::vector<std::int64_t> coords;
  detail::extend_kunz(m, bound, coords, visit);
}

/// Every monoid of multiplicity m whose Kunz coordinates are at most K.
inline std::vector<NumericalMonoid> enumerate_monoids(std::int64_t m, std::int64_t bound) {
  std::vector<NumericalMonoid> out;
  for_each_kunz(m, bound, [&](const std::vector<std::int64_t>& c) {
    out.push_back(from_generators(kunz_generators(KunzVector{m, c})));
  });
  return out;
}

struct Witness {
  KunzVector kunz;
  std::vector<std::int64_t> generators;
};

/// Best values found in one part of the Kunz box.
struct SearchTally {
  std::int64_t best_rho = -1;
  std::optional<Witness> rho_witness;
  std::int64_t best_type = -1;
  std::optional<Witness> type_witness;
  std::int64_t scanned = 0;   // valid Kunz vectors visited
  std::int64_t matching = 0;  // of which with embedding dimension e + 1

  // Larger value wins; ties go to the lexicographically least Kunz vector.
  static void offer(std::int64_t value, const Witness& w, std::int64_t& best, std::optional<Witness>& slot) {
    if (value > best || (value == best && slot && w.kunz < slot->kunz)) {
      best = value;
      slot = w;
    }
  }

  void merge(const SearchTally& o) {
    if (o.rho_witness) offer(o.best_rho, *o.rho_witness, best_rho, rho_witness);
    if (o.type_witness) offer(o.best_type, *o.type_witness, best_type, type_witness);
    scanned += o.scanned;
    matching += o.matching;
  }
};

struct SearchResult {
  std::int64_t e = 0, m = 0;
  std::int64_t kunz_bound = 0;
  SearchTally tally;
  bool exhausted = false;  // every Kunz vector with coordinates <= K was scanned
  BigInt cem, dem;
};

/// A work unit fixes the first coordinates of the Kunz vector.
using KunzPrefix = std::vector<std::int64_t>;

inline std::vector<KunzPrefix> search_units(std::int64_t m, std::int64_t bound) {
  const std::int64_t depth = std::min<std::int64_t>(2, m - 1);
  std::vector<KunzPrefix> out;
  std::function<void(KunzPrefix&)> rec = [&](KunzPrefix& p) {
    if (static_cast<std::int64_t>(p.size()) == depth) {
      out.push_back(p);
      return;
    }
    for (std::int64_t v = 1; v <= bound; ++v) {
      p.push_back(v);
      rec(p);
      p.pop_back();
    }
  };
  KunzPrefix p;
  rec(p);
  return out;
}

namespace detail {

// Every Kunz constraint among the first p coordinates.
inline bool kunz_prefix_ok(std::int64_t m, const KunzPrefix& k) {
  const auto p = static_cast<std::int64_t>(k.size());
  auto at = [&](std::int64_t i) { return k[static_cast<std::size_t>(i - 1)]; };
  for (std::int64_t i = 1; i <= p; ++i) {
    if (at(i) < 1) return false;
    for (std::int64_t j = i; j <= p; ++j) {
      if (i + j < m && i + j <= p && at(i) + at(j) < at(i + j)) return false;
      if (i + j > m && at(i) + at(j) + 1 < at(i + j - m)) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Scans one prefix: every valid completion with edim e + 1.
inline SearchTally scan_unit(std::int64_t e, std::int64_t m, std::int64_t bound, const KunzPrefix& prefix) {
  SearchTally t;
  if (!detail::kunz_prefix_ok(m, prefix)) return t;
  auto coords = prefix;
  detail::extend_kunz(m, bound, coords, [&](const std::vector<std::int64_t>& c) {
    ++t.scanned;
    const KunzVector v{m, c};
    const auto gens = kunz_generators(v);
    if (static_cast<std::int64_t>(gens.size()) != e + 1) return;
    ++t.matching;
    const auto g = from_generators(gens);
    const Witness w{v, gens};
    SearchTally::offer(rho(g).rho, w, t.best_rho, t.rho_witness);
    SearchTally::offer(type(g), w, t.best_type, t.type_witness);
  });
  return t;
}

struct SearchOptions {
  unsigned jobs = 1;
  /// Units already finished (e.g. loaded from a checkpoint) and their tallies.
  std::map<KunzPrefix, SearchTally> completed;
  /// Called after each newly finished unit, serialized.
  std::function<void(const KunzPrefix&, const SearchTally&)> on_unit_done;
  /// When set and true, workers stop picking up new units.
  const std::atomic<bool>* stop = nullptr;
};

/// Maximum rho and type over monoids with edim e + 1, multiplicity m and
/// Kunz coordinates <= K.  Deterministic in (e, m, K) for any job count.
inline SearchResult max_invariants(std::int64_t e, std::int64_t m, std::int64_t bound, SearchOptions opts = {}) {
  if (e < 1 || e >= m) throw error(error_kind::invalid_argument, "max_invariants requires 1 <= e < m");
  if (bound < 1) throw error(error_kind::invalid_argument, "Kunz bound must be positive");

  const auto units = search_units(m, bound);
  std::vector<std::optional<SearchTally>> results(units.size());
  std::vector<std::size_t> todo;
  for (std::size_t u = 0; u < units.size(); ++u) {
    if (auto it = opts.completed.find(units[u]); it != opts.completed.end())
      results[u] = it->second;
    else
      todo.push_back(u);
  }

  std::atomic<std::size_t> next{0};
  std::mutex done_mutex;
  auto worker = [&] {
    for (;;) {
      if (opts.stop && opts.stop->load()) return;
      const std::size_t k = next.fetch_add(1);
      if (k >= todo.size()) return;
      const std::size_t u = todo[k];
      auto tally = scan_unit(e, m, bound, units[u]);
      std::lock_guard lock(done_mutex);
      results[u] = tally;
      if (opts.on_unit_done) opts.on_unit_done(units[u], tally);
    }
  };
  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  SearchResult out;
  out.e = e;
  out.m = m;
  out.kunz_bound = bound;
  out.exhausted = true;
  for (const auto& r : results) {
    if (r)
      out.tally.merge(*r);
    else
      out.exhausted = false;
  }
  // Two generators: a complete intersection, one relation and type 1.
  out.cem = e == 1 ? BigInt(1) : cem(e, m);
  out.dem = e == 1 ? BigInt(1) : dem(e, m);
  return out;
}

}  // namespace nm
