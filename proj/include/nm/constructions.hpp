#pragma once

// Numerical monoids attaining the bound on the number of relations: the
// power-of-two family for large multiplicity and the six families with
// m - e <= 6.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nm/arith.hpp"
#include "nm/error.hpp"
#include "nm/monoid.hpp"
#include "nm/presentation.hpp"

namespace nm {

struct FamilyParams {
  std::int64_t delta = 1;
  std::int64_t t = 1;
  std::int64_t q = 0;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// delta - 1 = C(t, 2) - q with 0 <= q <= t - 2.  delta = 1 maps to (t, q) = (1, 0).
inline FamilyParams tq_decompose(std::int64_t delta) {
  if (delta < 1) throw error(error_kind::invalid_argument, "delta must be positive");
  if (delta == 1) return {1, 1, 0};
  std::int64_t t = 2;
  while (t * (t - 1) / 2 < delta - 1) ++t;
  return {delta, t, t * (t - 1) / 2 - (delta - 1)};
}

/// {0} u {m + 2^i - 1 : i < t} u [h, inf) with h = m + 2^(t-1) + 2^(t-q-1) - 1,
/// for delta = m - e >= 2 and m >= 2^t.
inline NumericalMonoid sharp_family_large_m(std::int64_t e, std::int64_t m) {
  const std::int64_t delta = m - e;
  if (delta <= 1) throw error(error_kind::invalid_argument, "delta too small for family (need m - e >= 2)");
  const auto [d, t, q] = tq_decompose(delta);
  if (t >= 62 || m < (std::int64_t{1} << t))
    throw error(error_kind::invalid_argument,
                "m below 2^t threshold (m=" + std::to_string(m) + ", t=" + std::to_string(t) + ")");
  std::vector<std::int64_t> raw;
  for (std::int64_t i = 0; i < t; ++i) raw.push_back(m + (std::int64_t{1} << i) - 1);
  const std::int64_t h = m + (std::int64_t{1} << (t - 1)) + (std::int64_t{1} << (t - q - 1)) - 1;
  for (std::int64_t g = h; g < h + m; ++g) raw.push_back(g);
  return from_generators(raw);
}

/// The generator list for m - e = delta in [1, 6]; runs "a, ..., b" are
/// expanded and may be empty for small e.
inline std::vector<std::int64_t> small_delta_generator_list(std::int64_t e, std::int64_t delta) {
  std::vector<std::int64_t> g;
  auto run = [&](std::int64_t a, std::int64_t b) {
    for (std::int64_t x = a; x <= b; ++x) g.push_back(x);
  };
  switch (delta) {
    case 1: run(e + 1, 2 * e + 1); break;
    case 2: g = {e + 2, e + 3}; run(e + 5, 2 * e + 3); break;
    case 3: g = {e + 3, e + 4, e + 6, e + 7}; run(e + 9, 2 * e + 5); break;
    case 4: g = {e + 4, e + 5, e + 7, 2 * e + 13}; run(2 * e + 15, 3 * e + 11); break;
    case 5: g = {e + 5, e + 6, 2 * e + 8, 3 * e + 12}; run(3 * e + 19, 4 * e + 15); break;
    case 6: g = {e + 6, e + 7, e + 9, e + 10}; run(e + 15, 2 * e + 11); break;
    default: throw error(error_kind::invalid_argument, "delta out of range [1,6]");
  }
  return g;
}

/// The extremal monoid with multiplicity e + delta and embedding dimension e + 1.
inline NumericalMonoid sharp_family_small_delta(std::int64_t e, std::int64_t delta) {
  if (delta < 1 || delta > 6) throw error(error_kind::invalid_argument, "delta out of range [1,6]");
  if (e < 3) throw error(error_kind::invalid_argument, "sharp_family_small_delta requires e >= 3");
  const auto raw = small_delta_generator_list(e, delta);
  auto g = from_generators(raw);
  if (g.edim() != e + 1 || g.multiplicity() != e + delta)
    throw error(error_kind::hypothesis_violated, "generator list is not minimal for e=" + std::to_string(e));
  return g;
}

/// The Apery set of the delta-family as an explicit list (sorted).
inline std::vector<std::int64_t> small_delta_apery_list(std::int64_t e, std::int64_t delta) {
  std::vector<std::int64_t> ap{0};
  auto run = [&](std::int64_t a, std::int64_t b) {
    for (std::int64_t x = a; x <= b; ++x) ap.push_back(x);
  };
  switch (delta) {
    case 1: run(e + 2, 2 * e + 1); break;
    case 2: ap.push_back(e + 3); run(e + 5, 2 * e + 3); ap.push_back(2 * e + 6); break;
    case 3:
      ap.insert(ap.end(), {e + 4, e + 6, e + 7});
      run(e + 9, 2 * e + 5);
      ap.insert(ap.end(), {2 * e + 8, 2 * e + 11});
      break;
    case 4:
      ap.insert(ap.end(), {e + 5, e + 7, 2 * e + 10, 2 * e + 12, 2 * e + 13, 2 * e + 14});
      run(2 * e + 15, 3 * e + 11);
      break;
    case 5:
      ap.insert(ap.end(), {e + 6, 2 * e + 8, 2 * e + 12, 3 * e + 12, 3 * e + 14, 3 * e + 18});
      run(3 * e + 19, 4 * e + 15);
      ap.push_back(4 * e + 16);
      break;
    case 6:
      ap.insert(ap.end(), {e + 7, e + 9, e + 10});
      run(e + 15, 2 * e + 11);
      ap.insert(ap.end(), {2 * e + 14, 2 * e + 17, 2 * e + 18, 2 * e + 19, 2 * e + 20});
      break;
    default: throw error(error_kind::invalid_argument, "delta out of range [1,6]");
  }
  std::sort(ap.begin(), ap.end());
  return ap;
}

struct SharpnessReport {
  std::int64_t e = 0, m = 0;
  bool mult_ok = false;
  bool edim_ok = false;
  bool apery_unique = false;
  std::int64_t rho_graph = 0;
  std::optional<std::int64_t> rho_rosales;  // absent when the hypothesis fails
  BigInt cem;
  std::int64_t type = 0;
  BigInt dem;

  [[nodiscard]] bool rho_sharp() const { return BigInt(rho_graph) == cem; }
  [[nodiscard]] bool type_sharp() const { return BigInt(type) == dem; }
  [[nodiscard]] bool passed() const {
    return mult_ok && edim_ok && apery_unique && rho_rosales == rho_graph && rho_sharp();
  }
};

/// End-to-end check that g has multiplicity m, embedding dimension e + 1 and
/// rho equal to the bound, by both counting methods.
inline SharpnessReport verify_sharp(const NumericalMonoid& g, std::int64_t e, std::int64_t m) {
  SharpnessReport r;
  r.e = e;
  r.m = m;
  r.mult_ok = g.multiplicity() == m;
  r.edim_ok = g.edim() == e + 1;
  r.apery_unique = apery_unique_factorization(g);
  r.rho_graph = rho(g).rho;
  if (r.apery_unique) r.rho_rosales = rho_unique_factorization(g).rho;
  r.cem = cem(e, m);
  r.type = type(g);
  r.dem = dem(e, m);
  return r;
}

}  // namespace nm
