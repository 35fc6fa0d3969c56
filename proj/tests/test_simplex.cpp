#include <random>

#include <gtest/gtest.h>

#include "gorenstein/simplex.hpp"
#include "support.hpp"

using namespace gorenstein;
using support::simplex;

TEST(Simplex, Volumes) {
  EXPECT_EQ(simplex({{0, 0}, {1, 0}, {0, 1}}).volume(), 1);
  EXPECT_EQ(simplex({{0}, {2}}).volume(), 2);
  EXPECT_EQ(simplex({{0, 0}, {1, 0}, {1, 1}}).volume(), 1);
}

TEST(Simplex, VolumeIsProductOfInvariantFactors) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = simplex(oracle::random_simplex(rng, 1 + trial % 4, 20));
    const auto smith = snf(s.homogenized());
    BigInt product = 1;
    for (Eigen::Index i = 0; i < smith.s.rows(); ++i) product *= smith.s(i, i);
    EXPECT_EQ(s.volume(), product);
  }
}

TEST(Simplex, RejectsDegenerateInput) {
  EXPECT_THROW(simplex({{0, 0}, {1, 1}, {2, 2}}), Error);
  EXPECT_THROW(simplex({{0, 0}, {1, 0}}), Error);
  EXPECT_THROW(simplex({{0, 0}, {1, 0}, {0}}), Error);
  try {
    simplex({{0, 0}, {1, 1}, {2, 2}});
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateSimplex);
  }
}

TEST(Simplex, VertexOrderKept) {
  const auto s = simplex({{1, 0}, {0, 0}, {0, 1}});
  EXPECT_EQ(s.vertices()(0, 0), 1);
  EXPECT_EQ(s.dim(), 2);
}

TEST(FamilyA, CyclicOrderFour) {
  const auto s = family_A({1, 1, 4});
  EXPECT_EQ(support::to_rows(s.vertices()), (oracle::Rows{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {3, 3, 4}}));
  EXPECT_EQ(std::abs(oracle::det(oracle::homogenize(support::to_rows(s.vertices())))), 4);
  EXPECT_EQ(s.volume(), 4);
  EXPECT_EQ(family_A({1, 1, 1}).volume(), 1);
}

TEST(FamilyA, SecondSequence) {
  const auto s = family_A({1, 2, 2, 4});
  EXPECT_EQ(support::to_rows(s.vertices()).back(), (oracle::Row{3, 2, 2, 4}));
  EXPECT_EQ(s.volume(), 4);
}

TEST(FamilyBC, Volumes) {
  const auto s = family_BC({1, 2}, {2, 2, 1, 1, 2});
  EXPECT_EQ(s.dim(), 5);
  EXPECT_EQ(std::abs(oracle::det(oracle::homogenize(support::to_rows(s.vertices())))), 4);
  EXPECT_EQ(s.volume(), 4);
  EXPECT_EQ(family_BC({1}, {1, 1}).volume(), 1);
  const auto t = family_BC({1, 2}, {3, 3, 1, 1, 1, 1, 3});
  EXPECT_EQ(t.dim(), 7);
  EXPECT_EQ(t.volume(), 6);
}

TEST(Pyramid, Construction) {
  const auto p = pyramid(simplex({{0}, {2}}));
  EXPECT_EQ(support::to_rows(p.vertices()), (oracle::Rows{{0, 0}, {2, 0}, {0, 1}}));
  EXPECT_EQ(pyramid(simplex({{0, 0}, {1, 0}, {0, 1}})).volume(), 1);
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = simplex(oracle::random_simplex(rng, 1 + trial % 4, 20));
    EXPECT_EQ(pyramid(s).volume(), s.volume());
  }
}

TEST(CountPoints, SmallCases) {
  EXPECT_EQ(count_points(simplex({{0, 0}, {1, 0}, {0, 1}}), 2), 6u);
  EXPECT_EQ(count_points(simplex({{0}, {2}}), 1), 3u);
  // conv(0, e1, e2, (3,3,4)): the four vertices plus (1,1,1), all barycentric weights 1/4
  EXPECT_EQ(count_points(family_A({1, 1, 4}), 1), 5u);
  EXPECT_EQ(count_points(simplex({{0}, {2}}), 0), 1u);
}

TEST(CountPoints, MatchesExhaustiveScan) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 1 + trial % 4;
    const auto rows = oracle::random_simplex(rng, d, 8);
    const auto s = simplex(rows);
    for (std::int64_t n = 0; n <= (d <= 2 ? 6 : 3); ++n) EXPECT_EQ(count_points(s, n), oracle::count_points(rows, n));
  }
  const auto a = support::to_rows(family_A({1, 1, 4}).vertices());
  for (std::int64_t n = 0; n <= 4; ++n) EXPECT_EQ(count_points(family_A({1, 1, 4}), n), oracle::count_points(a, n));
}

TEST(CountPoints, InvariantUnderTranslationAndUnimodularMaps) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 1 + trial % 4;
    const auto rows = oracle::random_simplex(rng, d, 10);
    const auto u = oracle::random_unimodular(rng, d);
    auto image = oracle::multiply(rows, u);
    std::uniform_int_distribution<std::int64_t> shift(-3, 3);
    oracle::Row t(d);
    for (auto& x : t) x = shift(rng);
    for (auto& row : image)
      for (std::size_t c = 0; c < d; ++c) row[c] += t[c];
    const auto s = simplex(rows), s2 = simplex(image);
    for (std::int64_t n = 0; n <= 4; ++n) EXPECT_EQ(count_points(s, n), count_points(s2, n));
  }
}

TEST(CountPoints, BudgetAndArguments) {
  const auto s = family_A({1, 1, 1, 1, 6});
  EXPECT_THROW(count_points(s, 10, 5), Error);
  EXPECT_THROW(count_points(s, -1), Error);
  try {
    count_points(s, 10, 5);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}
