#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ramify/partitions.hpp"
#include "ramify/univariate.hpp"

using namespace ramify;

namespace {

Partition L(std::vector<unsigned> parts) { return Partition(std::move(parts)); }

// Every set partition of the parts, by brute force over group labels.
bool coarsens_by_brute_force(const Partition& mu, const Partition& lambda) {
  const auto& parts = lambda.parts();
  const std::size_t n = parts.size();
  std::vector<std::size_t> label(n, 0);
  for (;;) {
    std::vector<unsigned> sums(n, 0);
    for (std::size_t i = 0; i < n; ++i) sums[label[i]] += parts[i];
    std::vector<unsigned> nonzero;
    for (auto s : sums)
      if (s) nonzero.push_back(s);
    std::sort(nonzero.rbegin(), nonzero.rend());
    if (nonzero == mu.parts()) return true;
    std::size_t i = 0;
    while (i < n && ++label[i] == n) label[i++] = 0;
    if (i == n) return false;
  }
}

} // namespace

TEST(Partition, Basics) {
  auto p = L({1, 2, 1});
  EXPECT_EQ(p.parts(), (std::vector<unsigned>{2, 1, 1}));
  EXPECT_EQ(p.k(), 4u);
  EXPECT_EQ(p.e(), 3u);
  EXPECT_EQ(p.str(), "(2,1,1)");
  EXPECT_EQ(Partition::parse(" ( 1 , 2 ) "), L({2, 1}));
  EXPECT_THROW(Partition::parse("(2,0)"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("2,1"), std::invalid_argument);
  EXPECT_THROW(L({}), std::invalid_argument);
}

TEST(PartitionsOf, Examples) {
  auto p3 = partitions_of(3);
  ASSERT_EQ(p3.size(), 3u);
  EXPECT_EQ(p3[0], L({3}));
  EXPECT_EQ(p3[1], L({2, 1}));
  EXPECT_EQ(p3[2], L({1, 1, 1}));
  EXPECT_EQ(partitions_of(1), std::vector<Partition>{L({1})});
  EXPECT_THROW(partitions_of(0), std::invalid_argument);
}

TEST(PartitionsOf, CountsMatchEnumeration) {
  // Count compositions sorted into multisets, an independent enumeration.
  for (unsigned k = 1; k <= 10; ++k) {
    std::set<std::vector<unsigned>> seen;
    for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
      std::vector<unsigned> parts;
      unsigned run = 1;
      for (unsigned i = 0; i + 1 < k; ++i) {
        if (mask & (1u << i)) {
          parts.push_back(run);
          run = 1;
        } else {
          ++run;
        }
      }
      parts.push_back(run);
      std::sort(parts.rbegin(), parts.rend());
      seen.insert(parts);
    }
    auto all = partitions_of(k);
    ASSERT_EQ(all.size(), seen.size()) << k;
    for (const auto& p : all) ASSERT_TRUE(seen.count(p.parts()));
    for (std::size_t i = 1; i < all.size(); ++i) ASSERT_GT(all[i - 1], all[i]);
  }
  EXPECT_EQ(partitions_of(7).size(), 15u);
}

TEST(Coarsening, Examples) {
  EXPECT_TRUE(is_coarsening(L({3}), L({2, 1})));
  EXPECT_TRUE(is_coarsening(L({2, 2}), L({2, 1, 1})));
  EXPECT_FALSE(is_coarsening(L({3, 1}), L({2, 2})));
  EXPECT_TRUE(is_coarsening(L({2, 1}), L({2, 1})));
  EXPECT_THROW(is_coarsening(L({2}), L({2, 1})), std::invalid_argument);
}

TEST(Coarsening, MatchesBruteForce) {
  for (unsigned k = 1; k <= 7; ++k)
    for (const auto& mu : partitions_of(k))
      for (const auto& lambda : partitions_of(k))
        ASSERT_EQ(is_coarsening(mu, lambda), coarsens_by_brute_force(mu, lambda)) << mu.str() << lambda.str();
}

TEST(Coarsening, IsPartialOrder) {
  for (unsigned k = 1; k <= 8; ++k) {
    auto all = partitions_of(k);
    for (const auto& a : all) {
      ASSERT_TRUE(is_coarsening(a, a));
      ASSERT_TRUE(is_coarsening(L({k}), a));
      ASSERT_TRUE(is_coarsening(a, L(std::vector<unsigned>(k, 1))));
      for (const auto& b : all) {
        const bool ab = is_coarsening(a, b);
        if (ab && is_coarsening(b, a)) ASSERT_EQ(a, b);
        if (!ab) continue;
        for (const auto& c : all)
          if (is_coarsening(b, c)) ASSERT_TRUE(is_coarsening(a, c));
      }
    }
  }
}

TEST(StrictCoarsenings, Examples) {
  EXPECT_EQ(strict_coarsenings(L({1, 1, 1})), (std::vector<Partition>{L({3}), L({2, 1})}));
  EXPECT_TRUE(strict_coarsenings(L({5})).empty());
  EXPECT_EQ(strict_coarsenings(L({2, 1, 1})), (std::vector<Partition>{L({4}), L({3, 1}), L({2, 2})}));
}

TEST(StrictCoarsenings, UpwardClosed) {
  for (unsigned k = 1; k <= 6; ++k) {
    for (const auto& lambda : partitions_of(k)) {
      auto up = strict_coarsenings(lambda);
      for (const auto& mu : up) {
        ASSERT_NE(mu, lambda);
        for (const auto& nu : strict_coarsenings(mu))
          ASSERT_NE(std::find(up.begin(), up.end(), nu), up.end());
      }
    }
  }
}

TEST(Univariate, GcdAndSquarefree) {
  // (x - 1)^2 (x + 2)
  UPoly f({2, -3, 0, 1});
  UPoly g({-1, 1});
  EXPECT_EQ(gcd(f, UPoly({1, 0, -1})), g);
  auto parts = squarefree_decomposition(f);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], UPoly({2, 1}));
  EXPECT_EQ(parts[1], g);
  auto [q, r] = divmod(f, g);
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q * g, f);
  EXPECT_EQ(f.derivative(), UPoly({-3, 0, 3}));
  EXPECT_TRUE(gcd(UPoly(), UPoly()).is_zero());
}
