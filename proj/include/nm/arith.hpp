#pragma once

// Exact binomial and Macaulay-expansion arithmetic, and the extremal
// bound formulas for the number of relations and the type of a numerical
// monoid with given embedding dimension and multiplicity.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nm/error.hpp"

namespace nm {

using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k); zero when k > n.
inline BigInt binom(const BigInt& n, std::uint64_t k) {
  if (n < 0) throw error(error_kind::invalid_argument, "binom of a negative number");
  if (BigInt(k) > n) return 0;
  // Use the smaller of k and n - k.
  if (BigInt(2 * k) > n) k = static_cast<std::uint64_t>(n - BigInt(k));
  BigInt acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc *= n - BigInt(k) + BigInt(i);
    acc /= i;
  }
  return acc;
}

inline BigInt binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw error(error_kind::invalid_argument, "binom of a negative number");
  return binom(BigInt(n), static_cast<std::uint64_t>(k));
}

/// Converts an exact integer that is known to be small.
inline std::int64_t to_i64(const BigInt& v) {
  if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN))
    throw error(error_kind::resource_limit, "integer does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

struct MacaulayTerm {
  BigInt top;
  std::uint32_t bottom = 0;

  friend bool operator==(const MacaulayTerm&, const MacaulayTerm&) = default;
};

/// n = sum of C(top, bottom); bottoms d, d-1, ..., j; tops strictly decreasing.
struct MacaulayExpansion {
  BigInt n;
  std::uint32_t degree = 1;
  std::vector<MacaulayTerm> terms;
};

/// Greedy d-th Macaulay expansion.  The expansion of 0 is empty.
inline MacaulayExpansion macaulay_expansion(const BigInt& n, std::uint32_t d) {
  if (d < 1) throw error(error_kind::invalid_argument, "Macaulay expansion degree must be >= 1");
  if (n < 0) throw error(error_kind::invalid_argument, "Macaulay expansion of a negative number");
  MacaulayExpansion out{n, d, {}};
  BigInt rest = n;
  for (std::uint32_t k = d; k >= 1 && rest > 0; --k) {
    // Largest top with C(top, k) <= rest; C(k + rest, k) > rest bounds the search.
    BigInt lo = k, hi = BigInt(k) + rest;
    while (lo < hi) {
      BigInt mid = (lo + hi + 1) / 2;
      if (binom(mid, k) <= rest)
        lo = mid;
      else
        hi = mid - 1;
    }
    rest -= binom(lo, k);
    out.terms.push_back({lo, k});
  }
  return out;
}

/// n^<d> = sum C(top + 1, bottom + 1).
inline BigInt upper_shift(const BigInt& n, std::uint32_t d) {
  BigInt acc = 0;
  for (const auto& t : macaulay_expansion(n, d).terms) acc += binom(t.top + 1, t.bottom + 1);
  return acc;
}

/// n_<d> = sum C(top - 1, bottom).
inline BigInt lower_shift(const BigInt& n, std::uint32_t d) {
  BigInt acc = 0;
  for (const auto& t : macaulay_expansion(n, d).terms) acc += binom(t.top - 1, t.bottom);
  return acc;
}

struct RsPair {
  std::int64_t r = 1;
  std::int64_t s = 0;

  friend bool operator==(const RsPair&, const RsPair&) = default;
};

namespace detail {

// C(e+r-1, r-1) <= m < C(e+r, r), s = m - C(e+r-1, r-1); defined for all e, m >= 1.
inline RsPair rs_unchecked(std::int64_t e, std::int64_t m) {
  std::int64_t r = 1;
  while (binom(e + r, r) <= m) ++r;
  return {r, to_i64(BigInt(m) - binom(e + r - 1, r - 1))};
}

}  // namespace detail

inline RsPair rs_decompose(std::int64_t e, std::int64_t m) {
  if (e <= 1 || m <= e)
    throw error(error_kind::invalid_argument,
                "rs_decompose requires 1 < e < m (e=" + std::to_string(e) + ", m=" + std::to_string(m) + ")");
  return detail::rs_unchecked(e, m);
}

/// Upper bound for the number of minimal relations: C(e+r-1, r) + s^<r> - s.
inline BigInt cem(std::int64_t e, std::int64_t m) {
  const auto [r, s] = rs_decompose(e, m);
  return binom(e + r - 1, r) + upper_shift(s, static_cast<std::uint32_t>(r)) - s;
}

/// Upper bound for the type: C(e+r-2, r-1) + s_<r>.
inline BigInt dem(std::int64_t e, std::int64_t m) {
  const auto [r, s] = rs_decompose(e, m);
  return binom(e + r - 2, r - 1) + lower_shift(s, static_cast<std::uint32_t>(r));
}

/// Floor of the square root of a nonnegative integer.
inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

/// Ceiling of the square root of a nonnegative integer.
inline BigInt ceil_sqrt(const BigInt& n) {
  BigInt s = isqrt(n);
  return s * s < n ? s + 1 : s;
}

}  // namespace nm
