#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "nm/arith.hpp"
#include "nm/search.hpp"
#include "nm/serialize.hpp"
#include "oracles.hpp"

using Vec = std::vector<std::int64_t>;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("nm_test_" + name)).string();
}

bool same(const nm::SearchResult& a, const nm::SearchResult& b) {
  return nm::search_result_to_json(a) == nm::search_result_to_json(b);
}

}  // namespace

TEST(Kunz, Validity) {
  EXPECT_TRUE(nm::is_valid_kunz({4, {1, 1, 1}}));
  EXPECT_FALSE(nm::is_valid_kunz({4, {1, 1, 3}}));  // k1 + k2 < k3
  EXPECT_FALSE(nm::is_valid_kunz({4, {0, 1, 1}}));
  EXPECT_FALSE(nm::is_valid_kunz({4, {1, 1}}));
  EXPECT_THROW(nm::monoid_of({4, {1, 1, 3}}), nm::error);
}

TEST(Kunz, RoundTrip) {
  for (std::int64_t m = 2; m <= 9; ++m)
    nm::for_each_kunz(m, 3, [&](const Vec& c) {
      const nm::KunzVector v{m, c};
      ASSERT_TRUE(nm::is_valid_kunz(v));
      const auto g = nm::monoid_of(v);
      EXPECT_EQ(g.multiplicity(), m);
      EXPECT_EQ(nm::kunz_of(g), v);
      EXPECT_EQ(g.generators(), nm::kunz_generators(v));
    });
}

TEST(Kunz, EnumerationMatchesClosureCount) {
  for (std::int64_t m = 2; m <= 7; ++m)
    for (std::int64_t k = 1; k <= 3; ++k) {
      if ((k - 1) * m > 16) continue;
      EXPECT_EQ(static_cast<std::int64_t>(nm::enumerate_monoids(m, k).size()), oracle::count_monoids_naive(m, k))
          << m << ' ' << k;
    }
}

TEST(Kunz, FilterAgreesWithFullConstraintCheck) {
  for (std::int64_t m = 2; m <= 7; ++m) {
    std::int64_t by_filter = 0, by_check = 0;
    nm::for_each_kunz(m, 3, [&](const Vec&) { ++by_filter; });
    Vec c(static_cast<std::size_t>(m - 1), 1);
    for (;;) {
      if (nm::is_valid_kunz({m, c})) ++by_check;
      std::size_t i = 0;
      while (i < c.size() && c[i] == 3) c[i++] = 1;
      if (i == c.size()) break;
      ++c[i];
    }
    EXPECT_EQ(by_filter, by_check) << m;
  }
}

TEST(Search, Examples) {
  for (std::int64_t e = 1; e <= 3; ++e) {
    const auto r = nm::max_invariants(e, e + 1, 2);
    EXPECT_TRUE(r.exhausted);
    EXPECT_EQ(nm::BigInt(r.tally.best_rho), nm::binom(e + 1, 2));
    EXPECT_EQ(r.tally.best_type, e);
  }
  // Multiplicity 2: only <2, 3>, <2, 5>, ...; all have rho 1.
  EXPECT_EQ(nm::max_invariants(1, 2, 4).tally.best_rho, 1);
  EXPECT_EQ(nm::max_invariants(1, 2, 4).tally.matching, 4);
  // K = 1 forces every Kunz coordinate to 1: the monoid <m, ..., 2m-1>.
  const auto r41 = nm::max_invariants(3, 4, 1);
  EXPECT_EQ(r41.tally.scanned, 1);
  EXPECT_EQ(r41.tally.best_rho, 6);
  EXPECT_THROW(nm::max_invariants(4, 4, 2), nm::error);
  EXPECT_THROW(nm::max_invariants(2, 4, 0), nm::error);
}

TEST(Search, TypeDeficitWitness) {
  const auto r = nm::max_invariants(4, 11, 3);
  EXPECT_EQ(r.tally.best_type, 6);
  EXPECT_EQ(nm::BigInt(r.tally.best_type), r.dem - 1);
  ASSERT_TRUE(r.tally.type_witness);
  EXPECT_EQ(nm::type(nm::from_generators(r.tally.type_witness->generators)), 6);
}

TEST(Search, SmallGapSharpness) {
  for (auto [e, m] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 5}, {3, 6}, {4, 6}, {4, 7}, {5, 8}}) {
    const auto r = nm::max_invariants(e, m, 5);
    EXPECT_EQ(nm::BigInt(r.tally.best_rho), r.cem) << e << ' ' << m;
    EXPECT_EQ(nm::BigInt(r.tally.best_type), r.dem) << e << ' ' << m;
  }
}

TEST(Search, WitnessesReproduceValues) {
  for (std::int64_t m = 4; m <= 9; ++m)
    for (std::int64_t e = 2; e < m; ++e) {
      const auto r = nm::max_invariants(e, m, 3);
      if (r.tally.matching == 0) continue;
      const auto gr = nm::from_generators(r.tally.rho_witness->generators);
      const auto gt = nm::from_generators(r.tally.type_witness->generators);
      EXPECT_EQ(nm::rho(gr).rho, r.tally.best_rho);
      EXPECT_EQ(nm::type(gt), r.tally.best_type);
      EXPECT_EQ(gr.e(), e);
      EXPECT_EQ(nm::kunz_of(gr), r.tally.rho_witness->kunz);
      EXPECT_LE(nm::BigInt(r.tally.best_rho), r.cem);
      EXPECT_LE(nm::BigInt(r.tally.best_type), r.dem);
    }
}

TEST(Search, MonotoneInBound) {
  for (std::int64_t m = 5; m <= 8; ++m)
    for (std::int64_t e = 2; e < m; ++e) {
      std::int64_t prev_rho = -1, prev_type = -1, prev_scan = 0;
      for (std::int64_t k = 1; k <= 4; ++k) {
        const auto r = nm::max_invariants(e, m, k);
        EXPECT_GE(r.tally.best_rho, prev_rho);
        EXPECT_GE(r.tally.best_type, prev_type);
        EXPECT_GE(r.tally.scanned, prev_scan);
        prev_rho = r.tally.best_rho;
        prev_type = r.tally.best_type;
        prev_scan = r.tally.scanned;
      }
    }
}

TEST(Search, IndependentOfWorkerCount) {
  for (auto [e, m, k] : std::vector<std::array<std::int64_t, 3>>{{3, 8, 4}, {4, 9, 3}, {3, 10, 3}}) {
    const auto one = nm::max_invariants(e, m, k);
    for (unsigned jobs : {2u, 3u, 8u}) {
      nm::SearchOptions opts;
      opts.jobs = jobs;
      EXPECT_TRUE(same(one, nm::max_invariants(e, m, k, opts))) << e << ' ' << m << ' ' << jobs;
    }
  }
}

TEST(Search, UnitsPartitionTheBox) {
  const std::int64_t m = 8, k = 3;
  nm::SearchTally merged;
  for (const auto& p : nm::search_units(m, k)) merged.merge(nm::scan_unit(3, m, k, p));
  const auto whole = nm::max_invariants(3, m, k);
  EXPECT_EQ(merged.scanned, whole.tally.scanned);
  EXPECT_EQ(merged.best_rho, whole.tally.best_rho);
  std::int64_t total = 0;
  nm::for_each_kunz(m, k, [&](const Vec&) { ++total; });
  EXPECT_EQ(merged.scanned, total);
}

TEST(Search, StopFlagLeavesResultIncomplete) {
  std::atomic<bool> stop{true};
  nm::SearchOptions opts;
  opts.stop = &stop;
  const auto r = nm::max_invariants(3, 8, 3, opts);
  EXPECT_FALSE(r.exhausted);
  EXPECT_EQ(r.tally.scanned, 0);
}

TEST(Checkpoint, RoundTripAndResume) {
  const std::int64_t e = 3, m = 9, k = 3;
  const auto path = temp_path("ckpt.jsonl");
  std::remove(path.c_str());
  const auto full = nm::max_invariants(e, m, k);

  // First pass: stop after a few units.
  {
    std::atomic<bool> stop{false};
    std::ofstream out(path);
    int done = 0;
    nm::SearchOptions opts;
    opts.stop = &stop;
    opts.on_unit_done = [&](const nm::KunzPrefix& p, const nm::SearchTally& t) {
      out << nm::checkpoint_record(e, m, k, p, t) << '\n';
      if (++done == 3) stop = true;
    };
    const auto partial = nm::max_invariants(e, m, k, opts);
    EXPECT_FALSE(partial.exhausted);
    out << "{\"truncated\": ";  // an interrupted write
  }
  {
    std::ofstream out(path, std::ios::app);
    out << "\n" << nm::checkpoint_record(e, m + 1, k, {1, 1}, {}) << '\n';  // other parameters
  }
  const auto loaded = nm::load_checkpoint(path, e, m, k);
  EXPECT_EQ(loaded.size(), 3u);
  for (const auto& [p, t] : loaded)
    EXPECT_EQ(nm::tally_to_json(t), nm::tally_to_json(nm::scan_unit(e, m, k, p)));

  nm::SearchOptions resume;
  resume.completed = loaded;
  std::size_t rescanned = 0;
  resume.on_unit_done = [&](const nm::KunzPrefix&, const nm::SearchTally&) { ++rescanned; };
  const auto resumed = nm::max_invariants(e, m, k, resume);
  EXPECT_TRUE(same(resumed, full));
  EXPECT_EQ(rescanned + 3, nm::search_units(m, k).size());
  std::remove(path.c_str());
}

TEST(Checkpoint, MissingFileIsEmpty) { EXPECT_TRUE(nm::load_checkpoint(temp_path("absent.jsonl"), 3, 9, 3).empty()); }

TEST(Serialize, BigIntegers) {
  EXPECT_EQ(nm::big_to_json(nm::BigInt(42)), 42);
  EXPECT_EQ(nm::big_to_json(nm::binom(100, 50)), "100891344545564193334812497256");
}
