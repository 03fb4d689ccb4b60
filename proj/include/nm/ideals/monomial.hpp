#pragma once

// Monomial ideals in S = k[x1..xe]: Hilbert functions, lexsegment and very
// compressed lexsegment ideals, Eliahou-Kervaire Betti numbers and the
// hyperplane-section recursion for total Betti numbers of lex ideals.
//
// Lex order is x1 > x2 > ... > xe; within one degree a monomial u precedes v
// when the first nonzero entry of u - v is positive.  With exponent vectors
// that is exactly `u > v` under std::vector comparison.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nm/arith.hpp"
#include "nm/error.hpp"

namespace nm {

using Monomial = std::vector<std::int32_t>;

inline std::int64_t degree(const Monomial& u) { return std::accumulate(u.begin(), u.end(), std::int64_t{0}); }

inline bool divides(const Monomial& u, const Monomial& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

inline Monomial multiply(Monomial u, const Monomial& v) {
  for (std::size_t i = 0; i < u.size(); ++i) u[i] += v[i];
  return u;
}

inline Monomial variable(std::size_t nvars, std::size_t i, std::int32_t power = 1) {
  Monomial u(nvars, 0);
  u[i] = power;
  return u;
}

/// 1-based index of the last variable dividing u (0 for the unit monomial).
inline std::size_t max_index(const Monomial& u) {
  for (std::size_t i = u.size(); i > 0; --i)
    if (u[i - 1] > 0) return i;
  return 0;
}

/// True when u precedes v in lex order (both of the same degree).
inline bool lex_greater(const Monomial& u, const Monomial& v) { return u > v; }

/// All monomials of degree d in nvars variables, lex-first first.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::int64_t d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial cur(nvars, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t rest) {
    if (i + 1 == nvars) {
      cur[i] = static_cast<std::int32_t>(rest);
      out.push_back(cur);
      return;
    }
    for (std::int64_t a = rest; a >= 0; --a) {
      cur[i] = static_cast<std::int32_t>(a);
      rec(i + 1, rest - a);
    }
  };
  rec(0, d);
  return out;
}

/// Removes every monomial divisible by another one in the list; sorts the
/// survivors by degree, then lex-first.
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = degree(a), db = degree(b);
    return da != db ? da < db : a > b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (auto& g : gens) {
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return divides(h, g); }))
      out.push_back(std::move(g));
  }
  return out;
}

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars) {
    for (const auto& g : gens)
      if (g.size() != nvars) throw error(error_kind::invalid_argument, "monomial has wrong number of variables");
    gens_ = minimalize(std::move(gens));
  }

  [[nodiscard]] std::size_t nvars() const noexcept { return nvars_; }
  [[nodiscard]] const std::vector<Monomial>& min_gens() const noexcept { return gens_; }

  [[nodiscard]] bool contains(const Monomial& u) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, u); });
  }

  [[nodiscard]] std::int64_t max_generator_degree() const {
    std::int64_t d = 0;
    for (const auto& g : gens_) d = std::max(d, degree(g));
    return d;
  }

  /// Every variable has a pure power among the generators.
  [[nodiscard]] bool is_artinian() const {
    for (std::size_t i = 0; i < nvars_; ++i) {
      const bool has = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) {
        return max_index(g) == i + 1 && degree(g) == g[i];
      });
      if (!has) return false;
    }
    return true;
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<Monomial> gens_;
};

/// m^d in nvars variables.
inline MonomialIdeal maximal_ideal_power(std::size_t nvars, std::int64_t d) {
  return MonomialIdeal(nvars, monomials_of_degree(nvars, d));
}

/// h_0, h_1, ..., h_D with h_D > 0 and h_d = 0 beyond.
struct HilbertFunction {
  std::vector<std::int64_t> values;

  [[nodiscard]] std::int64_t colength() const { return std::accumulate(values.begin(), values.end(), std::int64_t{0}); }
  [[nodiscard]] std::int64_t at(std::size_t d) const { return d < values.size() ? values[d] : 0; }

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

/// Standard monomials of an artinian monomial ideal, grouped by degree.
inline std::vector<std::vector<Monomial>> standard_monomials(const MonomialIdeal& ideal) {
  if (!ideal.is_artinian()) throw error(error_kind::not_artinian, "some variable has no pure power in the ideal");
  std::vector<std::vector<Monomial>> out;
  std::vector<Monomial> cur;
  Monomial one(ideal.nvars(), 0);
  if (!ideal.contains(one)) cur.push_back(one);
  while (!cur.empty()) {
    out.push_back(cur);
    std::set<Monomial, std::greater<>> next;
    for (const auto& u : cur)
      for (std::size_t i = 0; i < ideal.nvars(); ++i) {
        auto v = u;
        ++v[i];
        if (!ideal.contains(v)) next.insert(std::move(v));
      }
    cur.assign(next.begin(), next.end());
  }
  return out;
}

inline HilbertFunction hilbert_function(const MonomialIdeal& ideal) {
  HilbertFunction hf;
  for (const auto& level : standard_monomials(ideal)) hf.values.push_back(static_cast<std::int64_t>(level.size()));
  return hf;
}

inline std::int64_t colength(const MonomialIdeal& ideal) { return hilbert_function(ideal).colength(); }

/// The unique very compressed lexsegment ideal of colength m: the lex-first
/// C(e+r-1, r) - s monomials of degree r plus m^(r+1).
inline MonomialIdeal very_compressed_lex(std::size_t e, std::int64_t m) {
  if (e < 1 || m < 1) throw error(error_kind::invalid_argument, "very_compressed_lex requires e >= 1 and m >= 1");
  const auto [r, s] = detail::rs_unchecked(static_cast<std::int64_t>(e), m);
  auto deg_r = monomials_of_degree(e, r);
  const auto keep = static_cast<std::size_t>(to_i64(binom(static_cast<std::int64_t>(e) + r - 1, r)) - s);
  std::vector<Monomial> gens(deg_r.begin(), deg_r.begin() + static_cast<std::ptrdiff_t>(keep));
  for (auto& u : monomials_of_degree(e, r + 1)) gens.push_back(std::move(u));
  return MonomialIdeal(e, std::move(gens));
}

namespace detail {

// Admissible under Macaulay's growth bound: h_0 = 1, h_1 <= e, h_{d+1} <= h_d^<d>.
inline bool macaulay_admissible(std::size_t e, const HilbertFunction& hf) {
  if (hf.values.empty() || hf.values[0] != 1) return false;
  for (std::size_t d = 0; d + 1 < hf.values.size(); ++d) {
    if (hf.values[d + 1] < 0) return false;
    const BigInt bound =
        d == 0 ? BigInt(e) : upper_shift(hf.values[d], static_cast<std::uint32_t>(d));
    if (BigInt(hf.values[d + 1]) > bound) return false;
  }
  return true;
}

}  // namespace detail

namespace detail {

// The lex-smallest `count` monomials of degree d, in increasing lex order.
inline std::vector<Monomial> lex_last_monomials(std::size_t nvars, std::int64_t d, std::size_t count) {
  std::vector<Monomial> out;
  Monomial u(nvars, 0);
  std::function<void(std::size_t, std::int32_t)> rec = [&](std::size_t i, std::int32_t rest) {
    if (out.size() >= count) return;
    if (i + 1 == nvars) {
      u[i] = rest;
      out.push_back(u);
      return;
    }
    for (std::int32_t a = 0; a <= rest && out.size() < count; ++a) {
      u[i] = a;
      rec(i + 1, rest - a);
    }
    u[i] = 0;
  };
  if (count > 0) rec(0, static_cast<std::int32_t>(d));
  return out;
}

}  // namespace detail

/// Lexsegment ideal with the given Hilbert function: in each degree the
/// lex-last h_d monomials are standard.  Admissibility makes these segments
/// an order ideal, so minimal generators are the non-standard monomials all
/// of whose divisors x^u / x_i are standard.
/// Throws error_kind::inadmissible when no such lex ideal exists.
inline MonomialIdeal lex_ideal_from_hf(std::size_t e, const HilbertFunction& hf) {
  if (e < 1) throw error(error_kind::invalid_argument, "lex_ideal_from_hf requires e >= 1");
  if (!hf.values.empty() && hf.values.back() == 0)
    throw error(error_kind::inadmissible, "trailing zero in Hilbert function");
  if (!detail::macaulay_admissible(e, hf)) throw error(error_kind::inadmissible, "Macaulay growth bound fails");

  const std::size_t top = hf.values.size();  // first degree with h = 0
  std::vector<Monomial> gens;
  std::set<Monomial> prev;  // standard monomials of degree d-1
  for (std::size_t d = 0; d <= top; ++d) {
    const auto h = static_cast<std::size_t>(hf.at(d));
    auto std_d = detail::lex_last_monomials(e, static_cast<std::int64_t>(d), h);
    if (std_d.size() < h) throw error(error_kind::inadmissible, "h_d exceeds the number of monomials");
    const std::set<Monomial> cur(std_d.begin(), std_d.end());
    if (d == 0) {
      if (h == 0) gens.emplace_back(e, 0);
    } else {
      std::set<Monomial> cand;
      for (const auto& v : prev)
        for (std::size_t i = 0; i < e; ++i) {
          auto u = v;
          ++u[i];
          if (!cur.count(u)) cand.insert(std::move(u));
        }
      for (const auto& u : cand) {
        bool minimal = true;
        for (std::size_t i = 0; i < e && minimal; ++i) {
          if (u[i] == 0) continue;
          auto w = u;
          --w[i];
          if (!prev.count(w)) minimal = false;
        }
        if (minimal) gens.push_back(u);
      }
    }
    prev = cur;
  }
  std::sort(gens.begin(), gens.end(), std::greater<>());
  return MonomialIdeal(e, std::move(gens));
}

/// True when, in every degree, the ideal's monomials form a lex-initial segment.
inline bool is_lexsegment(const MonomialIdeal& ideal) {
  const auto top = ideal.max_generator_degree();
  for (std::int64_t d = 0; d <= top; ++d) {
    bool outside_seen = false;
    for (const auto& u : monomials_of_degree(ideal.nvars(), d)) {
      const bool in = ideal.contains(u);
      if (in && outside_seen) return false;
      if (!in) outside_seen = true;
    }
  }
  return true;
}

/// Every admissible artinian Hilbert function with the given total, each
/// mapped to its lexsegment ideal.  Throws error_kind::resource_limit past `cap`.
inline std::vector<MonomialIdeal> enumerate_lex_ideals(std::size_t e, std::int64_t colength,
                                                       std::size_t cap = 200000) {
  if (e < 1 || colength < 1) throw error(error_kind::invalid_argument, "enumerate_lex_ideals requires e, colength >= 1");
  std::vector<MonomialIdeal> out;
  HilbertFunction hf{{1}};
  std::function<void(std::int64_t)> rec = [&](std::int64_t rest) {
    if (rest == 0) {
      if (out.size() >= cap) throw error(error_kind::resource_limit, "more than " + std::to_string(cap) + " lex ideals");
      out.push_back(lex_ideal_from_hf(e, hf));
      return;
    }
    const std::size_t d = hf.values.size() - 1;
    const BigInt bound = d == 0 ? BigInt(e) : upper_shift(hf.values[d], static_cast<std::uint32_t>(d));
    const std::int64_t hi = std::min<std::int64_t>(rest, bound > BigInt(rest) ? rest : to_i64(bound));
    for (std::int64_t h = hi; h >= 1; --h) {
      hf.values.push_back(h);
      rec(rest - h);
      hf.values.pop_back();
    }
  };
  rec(colength - 1);
  return out;
}

/// Image of the ideal in k[x1..x_{e-1}] = S/(xe): generators free of xe.
inline MonomialIdeal restrict_hyperplane(const MonomialIdeal& ideal) {
  if (ideal.nvars() == 0) throw error(error_kind::invalid_argument, "no variable to restrict");
  const std::size_t e = ideal.nvars();
  std::vector<Monomial> gens;
  for (const auto& g : ideal.min_gens())
    if (g[e - 1] == 0) gens.emplace_back(g.begin(), g.end() - 1);
  return MonomialIdeal(e - 1, std::move(gens));
}

/// Graded Betti numbers beta_{i,j} of an ideal, with totals beta_i.
struct BettiTable {
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> entries;

  [[nodiscard]] std::int64_t at(std::int64_t i, std::int64_t j) const {
    const auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }

  void add(std::int64_t i, std::int64_t j, std::int64_t v) {
    if (v == 0) return;
    entries[{i, j}] += v;
  }

  /// beta_0, ..., beta_{len-1}.
  [[nodiscard]] std::vector<std::int64_t> totals(std::size_t len) const {
    std::vector<std::int64_t> out(len, 0);
    for (const auto& [key, v] : entries)
      if (key.first >= 0 && static_cast<std::size_t>(key.first) < len) out[static_cast<std::size_t>(key.first)] += v;
    return out;
  }

  [[nodiscard]] std::int64_t total(std::int64_t i) const {
    std::int64_t acc = 0;
    for (const auto& [key, v] : entries)
      if (key.first == i) acc += v;
    return acc;
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Strongly stable in the Eliahou-Kervaire sense: x_i u / x_max(u) in I for
/// every generator u and every i < max(u).
inline bool is_stable(const MonomialIdeal& ideal) {
  for (const auto& u : ideal.min_gens()) {
    const auto mx = max_index(u);
    for (std::size_t i = 1; i < mx; ++i) {
      auto v = u;
      --v[mx - 1];
      ++v[i - 1];
      if (!ideal.contains(v)) return false;
    }
  }
  return true;
}

/// beta_{i, deg u + i} = sum over minimal generators u of C(max(u) - 1, i).
/// Throws error_kind::not_stable.
inline BettiTable ek_betti(const MonomialIdeal& ideal) {
  if (!is_stable(ideal)) throw error(error_kind::not_stable, "ideal is not stable");
  BettiTable t;
  for (const auto& u : ideal.min_gens()) {
    const auto mx = static_cast<std::int64_t>(max_index(u));
    for (std::int64_t i = 0; i + 1 <= std::max<std::int64_t>(mx, 1); ++i)
      t.add(i, degree(u) + i, to_i64(binom(std::max<std::int64_t>(mx - 1, 0), i)));
  }
  return t;
}

/// Totals beta_0..beta_{e-1} of an artinian lexsegment ideal through
/// beta_i(L) = beta_i(L restricted) + colength(L restricted) * C(e-1, i).
/// Throws error_kind::not_lexsegment.
inline std::vector<std::int64_t> betti_recursion(const MonomialIdeal& ideal) {
  if (!is_lexsegment(ideal)) throw error(error_kind::not_lexsegment, "ideal is not a lexsegment ideal");
  if (!ideal.is_artinian()) throw error(error_kind::not_artinian, "lex ideal must have finite colength");
  const std::size_t e = ideal.nvars();
  if (e == 1) return {1};
  const auto hat = restrict_hyperplane(ideal);
  const auto colen = colength(hat);
  const auto below = betti_recursion(hat);
  std::vector<std::int64_t> out(e, 0);
  for (std::size_t i = 0; i < e; ++i) {
    const std::int64_t b = i < below.size() ? below[i] : 0;
    out[i] = b + colen * to_i64(binom(static_cast<std::int64_t>(e) - 1, static_cast<std::int64_t>(i)));
  }
  return out;
}

}  // namespace nm
