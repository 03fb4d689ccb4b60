#include <gtest/gtest.h>

#include "nm/arith.hpp"
#include "nm/constructions.hpp"

using Vec = std::vector<std::int64_t>;

TEST(TqDecompose, Examples) {
  EXPECT_EQ(nm::tq_decompose(1), (nm::FamilyParams{1, 1, 0}));
  EXPECT_EQ(nm::tq_decompose(2), (nm::FamilyParams{2, 2, 0}));
  EXPECT_EQ(nm::tq_decompose(3), (nm::FamilyParams{3, 3, 1}));
  EXPECT_EQ(nm::tq_decompose(4), (nm::FamilyParams{4, 3, 0}));
  EXPECT_EQ(nm::tq_decompose(5), (nm::FamilyParams{5, 4, 2}));
  EXPECT_EQ(nm::tq_decompose(7), (nm::FamilyParams{7, 4, 0}));
  EXPECT_THROW(nm::tq_decompose(0), nm::error);
}

TEST(TqDecompose, Invariants) {
  for (std::int64_t d = 2; d <= 500; ++d) {
    const auto [delta, t, q] = nm::tq_decompose(d);
    EXPECT_EQ(delta, d);
    EXPECT_EQ(d - 1, t * (t - 1) / 2 - q);
    EXPECT_GE(q, 0);
    EXPECT_LE(q, t - 2);
  }
}

TEST(SmallDelta, AperyListsAndStructure) {
  static constexpr int excess[] = {0, 0, 0, 1, 1, 2};
  for (std::int64_t e = 3; e <= 12; ++e)
    for (std::int64_t d = 1; d <= 6; ++d) {
      const auto g = nm::sharp_family_small_delta(e, d);
      EXPECT_EQ(g.multiplicity(), e + d);
      EXPECT_EQ(g.edim(), e + 1);
      EXPECT_EQ(nm::apery_set(g).elements, nm::small_delta_apery_list(e, d)) << e << ' ' << d;
      EXPECT_EQ(nm::BigInt(nm::rho(g).rho), nm::binom(e + 1, 2) + excess[d - 1]);
    }
}

TEST(SmallDelta, Examples) {
  EXPECT_EQ(nm::sharp_family_small_delta(3, 1).generators(), (Vec{4, 5, 6, 7}));
  EXPECT_EQ(nm::sharp_family_small_delta(3, 4).generators(), (Vec{7, 8, 10, 19}));
  EXPECT_THROW(nm::sharp_family_small_delta(3, 7), nm::error);
  EXPECT_THROW(nm::sharp_family_small_delta(2, 1), nm::error);
}

TEST(SmallDelta, TypeAttainsBound) {
  for (std::int64_t e = 3; e <= 10; ++e)
    for (std::int64_t d = 1; d <= 6; ++d) {
      const auto r = nm::verify_sharp(nm::sharp_family_small_delta(e, d), e, e + d);
      EXPECT_TRUE(r.passed()) << e << ' ' << d;
      EXPECT_TRUE(r.type_sharp()) << e << ' ' << d;
    }
}

TEST(LargeM, Examples) {
  const auto g = nm::sharp_family_large_m(9, 16);
  EXPECT_EQ(g.multiplicity(), 16);
  EXPECT_EQ(g.edim(), 10);
  EXPECT_EQ(nm::BigInt(nm::rho(g).rho), nm::cem(9, 16));
  EXPECT_THROW(nm::sharp_family_large_m(10, 11), nm::error);  // delta 1
  EXPECT_THROW(nm::sharp_family_large_m(3, 10), nm::error);   // t = 4, m < 16
}

TEST(LargeM, SharpOverRange) {
  for (std::int64_t d = 2; d <= 9; ++d) {
    const auto [delta, t, q] = nm::tq_decompose(d);
    const std::int64_t lo = std::int64_t{1} << t;
    for (std::int64_t m = lo; m <= lo + 12; ++m) {
      const auto g = nm::sharp_family_large_m(m - d, m);
      const auto r = nm::verify_sharp(g, m - d, m);
      EXPECT_TRUE(r.passed()) << d << ' ' << m;
      EXPECT_EQ(g.edim(), m - d + 1);
      const auto& ap = nm::apery_set(g).elements;
      EXPECT_EQ(ap.back(), 2 * m + (std::int64_t{1} << (t - 1)) + (std::int64_t{1} << (t - q - 1)) - 2);
      EXPECT_EQ(ap.back() - m, nm::frobenius(g).value());
    }
  }
}
