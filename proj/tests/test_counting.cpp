#include <gtest/gtest.h>

#include "gorenstein/counting.hpp"
#include "oracles.hpp"

using namespace gorenstein;

TEST(CountM, Examples) {
  EXPECT_EQ(count_M(1), 1);
  EXPECT_EQ(count_M(8), 4);
  EXPECT_EQ(count_M(6), 3);
  EXPECT_EQ(count_M(12), 8);
  EXPECT_THROW(count_M(0), Error);
}

TEST(CountM, MatchesChainEnumeration) {
  for (std::int64_t v = 1; v <= 400; ++v) {
    EXPECT_EQ(count_M(v), oracle::count_chains(v)) << v;
    if (v >= 2) {
      EXPECT_EQ(chains_to(v).size(), oracle::count_chains(v)) << v;
    }
  }
}

TEST(CountM, PrimePowers) {
  for (std::int64_t p : {2, 3, 5, 7}) {
    std::int64_t v = 1;
    for (int l = 1; v <= 1'000'000 / p; ++l) {
      v *= p;
      EXPECT_EQ(count_M(v), BigInt(1) << (l - 1)) << v;
    }
  }
}

TEST(CountM, SquarefreeIsOrderedBell) {
  const std::int64_t primes[] = {2, 3, 5, 7, 11, 13};
  std::int64_t v = 1;
  for (int t = 1; t <= 6; ++t) {
    v *= primes[t - 1];
    EXPECT_EQ(count_M(v), ordered_bell(t)) << v;
  }
}

TEST(CountM, DependsOnlyOnExponents) {
  EXPECT_EQ(count_M(12), count_M(18));
  EXPECT_EQ(count_M(8), count_M(27));
  EXPECT_EQ(count_M(36), count_M(100));
  EXPECT_EQ(count_M(2 * 2 * 3 * 5), count_M(7 * 7 * 11 * 13));
}

TEST(OrderedBell, Values) {
  EXPECT_EQ(ordered_bell(0), 1);
  EXPECT_EQ(ordered_bell(2), 3);
  EXPECT_EQ(ordered_bell(3), 13);
  for (int t = 0; t <= 6; ++t) EXPECT_EQ(ordered_bell(t), oracle::ordered_partitions(t)) << t;
  EXPECT_EQ(ordered_bell(10), 102247563);
}

TEST(DivisorLattice, Covers) {
  const auto d = DivisorLattice::of(12);
  EXPECT_EQ(d.divisors, (std::vector<std::int64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(d.covers.size(), 7u);
}

TEST(KnownN, Table) {
  EXPECT_EQ(known_N(7, 0), 1);
  EXPECT_EQ(known_N(9, 0), 3);
  EXPECT_EQ(known_N(15, 2), 5);
  EXPECT_FALSE(known_N(8, 0).has_value());
  EXPECT_FALSE(known_N(30, 0).has_value());
}
