#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "phl/combinatorics.hpp"
#include "phl/rng.hpp"

namespace {

TEST(CounterRng, SameKeySameStream) {
  phl::CounterRng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    differs = differs || x != c();
  }
  EXPECT_TRUE(differs);
  EXPECT_EQ(a.counter(), 100U);
}

TEST(CounterRng, BelowStaysInRangeAndHitsEveryValue) {
  phl::CounterRng rng(7);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.below(7);
    ASSERT_LT(v, 7U);
    ++hits[v];
  }
  for (int h : hits) EXPECT_NEAR(h, 1000, 4 * std::sqrt(1000.0 * 6 / 7));
}

TEST(CounterRng, Uniform01IsInUnitInterval) {
  phl::CounterRng rng(9);
  double sum = 0;
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 10000, 0.5, 0.015);
}

TEST(DeriveSeed, DistinctAcrossGrid) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t m = 0; m < 200; ++m) {
    for (std::uint64_t i = 0; i < 200; ++i) seen.insert(phl::derive_seed(1234, m, i));
  }
  EXPECT_EQ(seen.size(), 40000U);
  EXPECT_NE(phl::derive_seed(1, 2, 3), phl::derive_seed(1, 3, 2));
}

TEST(FloydSample, SortedDistinctAndComplete) {
  phl::CounterRng rng(5);
  const auto s = phl::floyd_sample(rng, 100, 30);
  ASSERT_EQ(s.size(), 30U);
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  EXPECT_EQ(std::set<std::uint64_t>(s.begin(), s.end()).size(), 30U);
  for (auto v : s) EXPECT_LT(v, 100U);
  EXPECT_EQ(phl::floyd_sample(rng, 10, 10).size(), 10U);
  EXPECT_TRUE(phl::floyd_sample(rng, 10, 0).empty());
}

TEST(FloydSample, MarginalsAreUniform) {
  // Each of N items is included with probability m/N.
  const int n = 20, m = 5, runs = 20000;
  std::vector<int> hits(n, 0);
  for (int r = 0; r < runs; ++r) {
    phl::CounterRng rng(phl::derive_seed(77, static_cast<std::uint64_t>(r)));
    for (auto v : phl::floyd_sample(rng, n, m)) ++hits[v];
  }
  const double p = static_cast<double>(m) / n;
  const double sigma = std::sqrt(runs * p * (1 - p));
  for (int h : hits) EXPECT_NEAR(h, runs * p, 4 * sigma);
}

TEST(Shuffle, IsPermutation) {
  std::vector<int> v(50);
  std::iota(v.begin(), v.end(), 0);
  auto w = v;
  phl::CounterRng rng(3);
  phl::shuffle(w, rng);
  EXPECT_NE(v, w);
  std::sort(w.begin(), w.end());
  EXPECT_EQ(v, w);
}

TEST(Combinatorics, BinomialValues) {
  EXPECT_EQ(phl::binomial(5, 2), 10U);
  EXPECT_EQ(phl::binomial(7, 3), 35U);
  EXPECT_EQ(phl::binomial(3, 5), 0U);
  EXPECT_EQ(phl::binomial(60, 30), 118264581564861424ULL);
}

TEST(Combinatorics, ColexRankIsABijection) {
  std::set<std::uint64_t> ranks;
  phl::for_each_subset(9, 4, [&](std::span<const int> s) {
    const auto r = phl::colex_rank(s);
    EXPECT_LT(r, phl::binomial(9, 4));
    ranks.insert(r);
    const auto back = phl::colex_unrank(r, 9, 4);
    EXPECT_TRUE(std::equal(back.begin(), back.end(), s.begin(), s.end()));
  });
  EXPECT_EQ(ranks.size(), phl::binomial(9, 4));
  // Colex order: {0,1,2} < {0,1,3} < {0,2,3} < {1,2,3} < {0,1,4}.
  EXPECT_EQ(phl::colex_rank(std::vector<int>{1, 2, 3}), 3U);
  EXPECT_EQ(phl::colex_rank(std::vector<int>{0, 1, 4}), 4U);
}

TEST(Combinatorics, EnumerationCanStopEarly) {
  int seen = 0;
  phl::for_each_subset(10, 3, [&](std::span<const int>) { return ++seen < 5; });
  EXPECT_EQ(seen, 5);
}

TEST(Combinatorics, SubsetsOfPool) {
  const std::vector<int> pool{2, 5, 9};
  std::vector<std::vector<int>> got;
  phl::for_each_subset_of(std::span<const int>(pool), 2, [&](std::span<const int> s) { got.emplace_back(s.begin(), s.end()); });
  ASSERT_EQ(got.size(), 3U);
  for (const auto& s : got) {
    EXPECT_EQ(s.size(), 2U);
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  }
}

}  // namespace
