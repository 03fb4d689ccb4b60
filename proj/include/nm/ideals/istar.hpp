#pragma once

// The homogeneous ideal of initial forms attached to a numerical monoid, in
// e variables x1..xe standing for the non-multiplicity generators g1..ge.
// Generated by
//   x^a - x^b   with a, b factorizations of one Apery element, |a| = |b|;
//   x^a         with a a factorization of an Apery element that also has a
//               strictly longer factorization;
//   x^a         with sum a_i g_i outside the Apery set.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nm/error.hpp"
#include "nm/ideals/koszul.hpp"
#include "nm/monoid.hpp"
#include "nm/presentation.hpp"

namespace nm {

struct IstarOptions {
  std::int64_t max_degree = 64;  // truncation degree cap for the certificate loop
  KoszulLimits limits{};
};

namespace detail {

inline Monomial to_monomial(const ExponentVector& v) {
  Monomial u(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) u[i] = static_cast<std::int32_t>(v[i]);
  return u;
}

inline GradedIdeal istar_truncated(const NumericalMonoid& g, std::int64_t cap,
                                   const std::vector<std::pair<std::int64_t, std::vector<AperyFactorization>>>& facts,
                                   const std::vector<ExponentVector>& outside_min) {
  const auto e = static_cast<std::size_t>(g.e());
  std::vector<Monomial> monomials;
  std::vector<Binomial> binomials;
  for (const auto& [w, fs] : facts) {
    std::map<std::int64_t, std::vector<Monomial>> by_length;
    std::int64_t longest = 0;
    for (const auto& a : fs) {
      const auto len = degree(to_monomial(a));
      longest = std::max(longest, len);
      by_length[len].push_back(to_monomial(a));
    }
    for (const auto& [len, us] : by_length) {
      if (len > cap) continue;
      for (std::size_t k = 1; k < us.size(); ++k) binomials.push_back({us[k - 1], us[k]});
      if (len < longest)
        for (const auto& u : us) monomials.push_back(u);
    }
  }
  for (const auto& a : outside_min) {
    auto u = to_monomial(a);
    if (degree(u) <= cap) monomials.push_back(std::move(u));
  }
  return GradedIdeal(e, std::move(monomials), std::move(binomials));
}

}  // namespace detail

/// Generators of the initial-form ideal truncated at a degree D, where D
/// starts at (longest Apery factorization) + 1 and doubles until the
/// quotient has colength equal to the multiplicity.
/// Throws error_kind::not_certified when the cap is reached first.
inline GradedIdeal istar_ideal(const NumericalMonoid& g, const IstarOptions& opts = {}) {
  const auto facts = apery_factorizations(g);
  std::vector<ExponentVector> downset;
  std::int64_t longest = 0;
  for (const auto& [w, fs] : facts)
    for (const auto& a : fs) {
      downset.push_back(a);
      std::int64_t len = 0;
      for (auto c : a) len += c;
      longest = std::max(longest, len);
    }
  const auto outside_min = min_elements_of_upset_complement(downset, static_cast<std::size_t>(g.e()));

  for (std::int64_t cap = longest + 1; cap <= opts.max_degree; cap *= 2) {
    auto ideal = detail::istar_truncated(g, cap, facts, outside_min);
    try {
      if (hilbert_function(ideal, opts.limits).colength() == g.multiplicity()) return ideal;
    } catch (const error& ex) {
      if (ex.kind() != error_kind::not_artinian) throw;
    }
  }
  throw error(error_kind::not_certified,
              "colength never matched the multiplicity up to degree " + std::to_string(opts.max_degree));
}

}  // namespace nm
