#pragma once

// Sumsets in Z/mZ and the counting predicates built on them.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nm/arith.hpp"
#include "nm/error.hpp"

namespace nm {

/// A subset of Z/mZ stored as a bit set.
class ModularSubset {
 public:
  explicit ModularSubset(std::int64_t modulus) : modulus_(modulus), words_(word_count(modulus), 0) {
    if (modulus < 1) throw error(error_kind::invalid_argument, "modulus must be positive");
  }

  ModularSubset(std::int64_t modulus, const std::vector<std::int64_t>& elements) : ModularSubset(modulus) {
    for (auto a : elements) insert(a);
  }

  [[nodiscard]] std::int64_t modulus() const noexcept { return modulus_; }

  /// Inserts the residue of a (any integer).
  void insert(std::int64_t a) {
    const auto r = static_cast<std::uint64_t>(((a % modulus_) + modulus_) % modulus_);
    words_[r / 64] |= std::uint64_t{1} << (r % 64);
  }

  [[nodiscard]] bool contains(std::int64_t r) const {
    if (r < 0 || r >= modulus_) return false;
    const auto u = static_cast<std::uint64_t>(r);
    return (words_[u / 64] >> (u % 64)) & 1u;
  }

  [[nodiscard]] std::int64_t size() const noexcept {
    std::int64_t n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

  /// Sorted residues.
  [[nodiscard]] std::vector<std::int64_t> elements() const {
    std::vector<std::int64_t> out;
    for (std::int64_t r = 0; r < modulus_; ++r)
      if (contains(r)) out.push_back(r);
    return out;
  }

  /// Cyclic shift by c: {a + c}.
  [[nodiscard]] ModularSubset shifted(std::int64_t c) const {
    ModularSubset out(modulus_);
    c = ((c % modulus_) + modulus_) % modulus_;
    if (modulus_ <= 64) {
      const std::uint64_t w = words_[0];
      const auto m = static_cast<unsigned>(modulus_);
      const auto s = static_cast<unsigned>(c);
      const std::uint64_t mask = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
      std::uint64_t hi = s == 0 ? w : (w << s);
      std::uint64_t lo = s == 0 ? 0 : (w >> (m - s));
      out.words_[0] = (hi | lo) & mask;
      return out;
    }
    for (std::int64_t r = 0; r < modulus_; ++r)
      if (contains(r)) out.insert(r + c);
    return out;
  }

  ModularSubset& operator|=(const ModularSubset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  friend bool operator==(const ModularSubset&, const ModularSubset&) = default;

 private:
  static std::size_t word_count(std::int64_t m) { return m < 1 ? 1 : static_cast<std::size_t>((m + 63) / 64); }

  std::int64_t modulus_;
  std::vector<std::uint64_t> words_;
};

/// A + B as a union of shifted copies of B.
inline ModularSubset sumset(const ModularSubset& a, const ModularSubset& b) {
  if (a.modulus() != b.modulus()) throw error(error_kind::invalid_argument, "moduli differ");
  ModularSubset out(a.modulus());
  for (auto x : a.elements()) out |= b.shifted(x);
  return out;
}

/// kA = A + ... + A (k times).
inline ModularSubset k_fold_sumset(const ModularSubset& a, std::int64_t k) {
  if (k < 1) throw error(error_kind::invalid_argument, "k must be positive");
  ModularSubset acc = a;
  for (std::int64_t i = 1; i < k; ++i) acc = sumset(acc, a);
  return acc;
}

/// m < C(e+k-1, k-1) + e C(e+k-2, k-1): then |kA| < C(e+k, k) for every
/// (e+1)-subset A of a group of order m.
inline bool sumset_bound_applies(std::int64_t e, std::int64_t m, std::int64_t k) {
  if (e < 0 || k < 1) throw error(error_kind::invalid_argument, "sumset_bound_applies requires e >= 0, k >= 1");
  if (e + k - 2 < 0) return BigInt(m) < binom(e + k - 1, k - 1);
  return BigInt(m) < binom(e + k - 1, k - 1) + BigInt(e) * binom(e + k - 2, k - 1);
}

/// Smallest k >= 2 with C(e+k, k) <= m <= C(e+k-1, k-1) + e C(e+k-2, k-1) - 1,
/// in which case the relation bound is not attained.
inline std::optional<std::int64_t> not_sharp_region(std::int64_t e, std::int64_t m) {
  if (e < 1) throw error(error_kind::invalid_argument, "not_sharp_region requires e >= 1");
  for (std::int64_t k = 2; binom(e + k, k) <= m; ++k)
    if (sumset_bound_applies(e, m, k)) return k;
  return std::nullopt;
}

/// Exponent t = ceil(3 + 3 sqrt(e)) = 3 + ceil(sqrt(9e)).
inline std::int64_t asymptotic_exponent(std::int64_t e) {
  if (e < 1) throw error(error_kind::invalid_argument, "asymptotic_exponent requires e >= 1");
  return 3 + to_i64(ceil_sqrt(BigInt(9) * e));
}

/// C(e+t, t): beyond it every m lies in some non-sharp region.
inline BigInt asymptotic_threshold(std::int64_t e) {
  if (e < 3) throw error(error_kind::invalid_argument, "asymptotic_threshold requires e >= 3");
  const auto t = asymptotic_exponent(e);
  return binom(e + t, t);
}

}  // namespace nm
