#include <set>

#include <gtest/gtest.h>

#include "gorenstein/abelian.hpp"
#include "oracles.hpp"

using namespace gorenstein;

TEST(Abelian, GroupsOfSmallOrder) {
  const auto four = groups_of_order(4);
  ASSERT_EQ(four.size(), 2u);
  EXPECT_EQ(four[0].factors, (std::vector<std::int64_t>{4}));
  EXPECT_EQ(four[1].factors, (std::vector<std::int64_t>{2, 2}));

  const auto six = groups_of_order(6);
  ASSERT_EQ(six.size(), 1u);
  EXPECT_EQ(six[0].factors, (std::vector<std::int64_t>{6}));

  const auto twelve = groups_of_order(12);
  ASSERT_EQ(twelve.size(), 2u);
  EXPECT_EQ(twelve[0].factors, (std::vector<std::int64_t>{12}));
  EXPECT_EQ(twelve[1].factors, (std::vector<std::int64_t>{2, 6}));

  EXPECT_TRUE(groups_of_order(1)[0].factors.empty());
}

TEST(Abelian, CountsMatchPartitionProduct) {
  for (std::int64_t v = 1; v <= 300; ++v) {
    const auto groups = groups_of_order(v);
    EXPECT_EQ(static_cast<std::int64_t>(groups.size()), oracle::abelian_group_count(v)) << v;
    std::set<std::vector<std::int64_t>> distinct;
    for (const auto& g : groups) {
      EXPECT_EQ(g.order(), v);
      for (std::size_t i = 0; i + 1 < g.factors.size(); ++i) EXPECT_EQ(g.factors[i + 1] % g.factors[i], 0);
      for (auto f : g.factors) EXPECT_GT(f, 1);
      distinct.insert(g.factors);
    }
    EXPECT_EQ(distinct.size(), groups.size());
    EXPECT_TRUE(groups.front().is_cyclic());
  }
}

TEST(Abelian, EncodeDecodeRoundTrip) {
  const AbstractGroup g{{2, 6}};
  for (std::int64_t i = 0; i < g.order(); ++i) EXPECT_EQ(g.encode(g.decode(i)), i);
  EXPECT_EQ(g.exponent(), 6);
}

TEST(Abelian, CharacterCounts) {
  for (const auto& [factors, nonzero] :
       std::vector<std::pair<std::vector<std::int64_t>, std::size_t>>{{{2}, 1}, {{4}, 3}, {{2, 2}, 3}}) {
    const auto chars = characters(AbstractGroup{factors});
    EXPECT_EQ(chars.size(), nonzero + 1);
    EXPECT_TRUE(chars.front().is_zero());
    std::size_t count = 0;
    for (const auto& c : chars) count += c.is_zero() ? 0 : 1;
    EXPECT_EQ(count, nonzero);
  }
}

TEST(Abelian, CharactersAreDistinctHomomorphisms) {
  for (const auto& factors : std::vector<std::vector<std::int64_t>>{{6}, {2, 4}, {3, 3}, {2, 2, 2}}) {
    const AbstractGroup g{factors};
    const std::int64_t e = g.exponent();
    std::set<std::vector<std::int64_t>> tables;
    for (const auto& chi : characters(g)) {
      tables.insert(chi.values);
      std::int64_t order = 1;
      while (true) {
        bool trivial = true;
        for (auto x : chi.values) trivial = trivial && (order * x) % e == 0;
        if (trivial) break;
        ++order;
      }
      EXPECT_EQ(order, chi.order);
      for (std::int64_t a = 0; a < g.order(); ++a) {
        for (std::int64_t b = 0; b < g.order(); ++b) {
          auto xa = g.decode(a), xb = g.decode(b);
          std::vector<std::int64_t> sum(xa.size());
          for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = (xa[i] + xb[i]) % g.factors[i];
          EXPECT_EQ(chi.values[g.encode(sum)], (chi.values[a] + chi.values[b]) % e);
        }
      }
    }
    EXPECT_EQ(static_cast<std::int64_t>(tables.size()), g.order());
  }
}

TEST(Abelian, StructureFromTorsionCounts) {
  for (std::int64_t v : {8, 12, 16, 36, 72}) {
    for (const auto& g : groups_of_order(v)) {
      auto killed = [&](std::int64_t m) {
        std::int64_t count = 0;
        for (std::int64_t i = 0; i < g.order(); ++i) {
          bool ok = true;
          for (std::size_t j = 0; j < g.factors.size(); ++j) ok = ok && (m * g.decode(i)[j]) % g.factors[j] == 0;
          count += ok ? 1 : 0;
        }
        return count;
      };
      EXPECT_EQ(structure_from_torsion_counts(v, killed), g);
    }
  }
}
