#include <gtest/gtest.h>

#include <map>

#include "nm/arith.hpp"
#include "nm/sumset.hpp"
#include "oracles.hpp"

using Vec = std::vector<std::int64_t>;

namespace {

// Every subset of Z/mZ of the given size containing 0.
template <class Visit>
void for_each_subset_with_zero(std::int64_t m, std::int64_t size, Visit&& visit) {
  Vec a{0};
  std::function<void(std::int64_t)> rec = [&](std::int64_t from) {
    if (static_cast<std::int64_t>(a.size()) == size) {
      visit(static_cast<const Vec&>(a));
      return;
    }
    for (std::int64_t x = from; x < m; ++x) {
      a.push_back(x);
      rec(x + 1);
      a.pop_back();
    }
  };
  rec(1);
}

}  // namespace

TEST(ModularSubset, Basics) {
  nm::ModularSubset a(10, {3, 13, -1, 25});
  EXPECT_EQ(a.elements(), (Vec{3, 5, 9}));
  EXPECT_EQ(a.size(), 3);
  EXPECT_FALSE(a.contains(10));
  EXPECT_EQ(a.shifted(2).elements(), (Vec{1, 5, 7}));
  EXPECT_THROW(nm::ModularSubset(0), nm::error);
  nm::ModularSubset big(130, {0, 64, 129});
  EXPECT_EQ(big.shifted(1).elements(), (Vec{0, 1, 65}));
}

TEST(Sumset, Examples) {
  const nm::ModularSubset a(10, {0, 1, 2, 3});
  const auto two = nm::k_fold_sumset(a, 2);
  EXPECT_EQ(two.elements(), (Vec{0, 1, 2, 3, 4, 5, 6}));
  EXPECT_LT(nm::BigInt(two.size()), nm::binom(5, 2));
  for (std::int64_t k = 1; k <= 5; ++k) EXPECT_EQ(nm::k_fold_sumset(nm::ModularSubset(7, {0}), k).elements(), (Vec{0}));
  EXPECT_THROW(nm::k_fold_sumset(a, 0), nm::error);
  EXPECT_THROW(nm::sumset(a, nm::ModularSubset(9, {0})), nm::error);
}

TEST(Sumset, MatchesTupleEnumeration) {
  for (std::int64_t m = 1; m <= 14; ++m)
    for (std::int64_t size = 1; size <= std::min<std::int64_t>(4, m); ++size)
      for_each_subset_with_zero(m, size, [&](const Vec& a) {
        const nm::ModularSubset s(m, a);
        for (std::int64_t k = 1; k <= 3; ++k) {
          const auto got = nm::k_fold_sumset(s, k).size();
          ASSERT_EQ(got, oracle::k_fold_size(a, m, k));
          EXPECT_LE(nm::BigInt(got), nm::binom(size - 1 + k, k));
          EXPECT_LE(got, m);
        }
      });
}

TEST(Sumset, FullSizeIffUniqueRepresentations) {
  for (std::int64_t m = 1; m <= 12; ++m)
    for (std::int64_t size = 1; size <= std::min<std::int64_t>(4, m); ++size)
      for_each_subset_with_zero(m, size, [&](const Vec& a) {
        std::map<std::int64_t, int> reps;
        for (std::size_t i = 0; i < a.size(); ++i)
          for (std::size_t j = i; j < a.size(); ++j) ++reps[(a[i] + a[j]) % m];
        const bool unique = std::all_of(reps.begin(), reps.end(), [](const auto& p) { return p.second == 1; });
        const auto got = nm::k_fold_sumset(nm::ModularSubset(m, a), 2).size();
        EXPECT_EQ(nm::BigInt(got) == nm::binom(size + 1, 2), unique);
      });
}

TEST(SumsetBound, Examples) {
  EXPECT_TRUE(nm::sumset_bound_applies(3, 10, 2));
  EXPECT_FALSE(nm::sumset_bound_applies(3, 13, 2));
  EXPECT_TRUE(nm::sumset_bound_applies(3, 12, 2));
  EXPECT_EQ(nm::not_sharp_region(3, 10), std::optional<std::int64_t>(2));
  EXPECT_EQ(nm::not_sharp_region(4, 15), std::optional<std::int64_t>(2));
  for (std::int64_t e = 1; e <= 12; ++e) EXPECT_EQ(nm::not_sharp_region(e, e + 1), std::nullopt);
}

TEST(SumsetBound, ExhaustiveSmallGroups) {
  std::int64_t checked = 0;
  for (std::int64_t m = 1; m <= 13; ++m)
    for (std::int64_t e = 2; e <= 3; ++e)
      for (std::int64_t k = 2; k <= 3; ++k) {
        if (!nm::sumset_bound_applies(e, m, k) || e + 1 > m) continue;
        for_each_subset_with_zero(m, e + 1, [&](const Vec& a) {
          ++checked;
          ASSERT_LT(nm::BigInt(nm::k_fold_sumset(nm::ModularSubset(m, a), k).size()), nm::binom(e + k, k))
              << m << ' ' << e << ' ' << k;
        });
      }
  EXPECT_GT(checked, 1000);
}

TEST(SumsetBound, FourElementSetsInSmallGroups) {
  // With three generators beyond m and m <= 12, A + A never reaches 10 elements.
  for (std::int64_t m = 4; m <= 12; ++m)
    for_each_subset_with_zero(m, 4, [&](const Vec& a) {
      ASSERT_LT(nm::k_fold_sumset(nm::ModularSubset(m, a), 2).size(), 10) << m;
    });
}

TEST(Threshold, Examples) {
  EXPECT_EQ(nm::asymptotic_exponent(3), 9);
  EXPECT_EQ(nm::asymptotic_threshold(3), 220);
  EXPECT_EQ(nm::asymptotic_exponent(4), 9);
  EXPECT_EQ(nm::asymptotic_threshold(4), 715);
  EXPECT_EQ(nm::asymptotic_exponent(9), 12);
  EXPECT_EQ(nm::asymptotic_threshold(9), nm::binom(21, 12));
  EXPECT_THROW(nm::asymptotic_threshold(2), nm::error);
}

TEST(Threshold, ExponentMatchesRealCeiling) {
  for (std::int64_t e = 1; e <= 400; ++e) {
    const auto t = nm::asymptotic_exponent(e);
    // t - 1 < 3 + 3 sqrt(e) <= t, i.e. (t-4)^2 < 9e <= (t-3)^2.
    EXPECT_LT((t - 4) * (t - 4), 9 * e);
    EXPECT_LE(9 * e, (t - 3) * (t - 3));
  }
}

TEST(Threshold, Coverage) {
  for (std::int64_t e = 3; e <= 5; ++e) {
    const auto lo = nm::to_i64(nm::asymptotic_threshold(e));
    for (std::int64_t m = lo; m <= lo + 2000; ++m) ASSERT_TRUE(nm::not_sharp_region(e, m).has_value()) << e << ' ' << m;
  }
}
