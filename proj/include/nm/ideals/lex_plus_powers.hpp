#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "nm/error.hpp"
#include "nm/ideals/koszul.hpp"
#include "nm/ideals/monomial.hpp"

namespace nm {

/// (x1^d1, ..., xc^dc) + L with L lexsegment and HF(S/ideal) = target.
/// Built degree by degree: the monomials forced by the powers and by lower
/// degrees are kept, then lex-earliest monomials are added until the degree
/// piece has the target codimension.
/// Throws error_kind::hypothesis_violated when no such ideal exists.
inline GradedIdeal lex_plus_powers(std::size_t e, const std::vector<std::int64_t>& powers,
                                   const HilbertFunction& target) {
  if (powers.size() > e) throw error(error_kind::invalid_argument, "more powers than variables");
  if (!std::is_sorted(powers.begin(), powers.end()))
    throw error(error_kind::invalid_argument, "degree sequence must be nondecreasing");
  for (auto d : powers)
    if (d < 1) throw error(error_kind::invalid_argument, "powers must be positive");

  auto fail = [](const std::string& why) {
    return error(error_kind::hypothesis_violated, "no lex-plus-powers ideal with this Hilbert function: " + why);
  };
  auto in_powers = [&](const Monomial& u) {
    for (std::size_t i = 0; i < powers.size(); ++i)
      if (u[i] >= powers[i]) return true;
    return false;
  };

  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < powers.size(); ++i) gens.push_back(variable(e, i, static_cast<std::int32_t>(powers[i])));

  std::set<Monomial> prev;  // ideal monomials of degree d-1
  const std::size_t top = target.values.size();
  for (std::size_t d = 0; d <= top; ++d) {
    const auto all = monomials_of_degree(e, static_cast<std::int64_t>(d));
    const auto want = static_cast<std::int64_t>(all.size()) - target.at(d);
    if (want < 0) throw fail("target exceeds the number of monomials in degree " + std::to_string(d));

    std::set<Monomial> cur;
    for (const auto& u : all) {
      if (in_powers(u)) {
        cur.insert(u);
        continue;
      }
      for (std::size_t i = 0; i < e; ++i) {
        if (u[i] == 0) continue;
        auto w = u;
        --w[i];
        if (prev.count(w)) {
          cur.insert(u);
          break;
        }
      }
    }
    if (static_cast<std::int64_t>(cur.size()) > want) throw fail("forced monomials exceed target in degree " + std::to_string(d));
    for (const auto& u : all) {
      if (static_cast<std::int64_t>(cur.size()) == want) break;
      if (cur.insert(u).second) gens.push_back(u);
    }

    // Non-power part must sit inside the lex segment it spans, up to powers.
    std::size_t last = 0;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (cur.count(all[k]) && !in_powers(all[k])) last = k + 1;
    for (std::size_t k = 0; k < last; ++k)
      if (!cur.count(all[k])) throw fail("non-power part is not a lex segment in degree " + std::to_string(d));

    prev = std::move(cur);
  }

  GradedIdeal out(e, std::move(gens));
  if (hilbert_function(out) != target) throw fail("Hilbert function check failed");
  return out;
}

}  // namespace nm
