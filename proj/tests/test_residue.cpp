#include <gtest/gtest.h>

#include "gorenstein/residue.hpp"

using namespace gorenstein;

TEST(Residue, ReducesIntoUnitInterval) {
  EXPECT_EQ(reduce_mod_one(Rational(5, 4)), Rational(1, 4));
  EXPECT_EQ(reduce_mod_one(Rational(-1, 3)), Rational(2, 3));
  EXPECT_EQ(reduce_mod_one(Rational(-2)), Rational(0));
  const ResidueVector x{Rational(3, 2), Rational(-1, 4)};
  EXPECT_EQ(x[0], Rational(1, 2));
  EXPECT_EQ(x[1], Rational(3, 4));
}

TEST(Residue, Height) {
  EXPECT_EQ(ht(ResidueVector::zero(4)), Rational(0));
  EXPECT_EQ(ht(ResidueVector{Rational(1, 2), Rational(1, 2)}), Rational(1));
  EXPECT_EQ(ht(ResidueVector{Rational(1, 3), Rational(1, 3), Rational(1, 3)}), Rational(1));
}

TEST(Residue, Order) {
  EXPECT_EQ(ord(ResidueVector::zero(3)), 1);
  EXPECT_EQ(ord(ResidueVector{Rational(1, 4), Rational(3, 4)}), 4);
  EXPECT_EQ(ord(ResidueVector{Rational(1, 2), Rational(1, 3)}), 6);
}

TEST(Residue, GroupLaw) {
  const ResidueVector a{Rational(1, 4), Rational(1, 2), Rational(0)};
  const ResidueVector b{Rational(3, 4), Rational(1, 2), Rational(1, 3)};
  EXPECT_EQ(a + b, (ResidueVector{Rational(0), Rational(0), Rational(1, 3)}));
  EXPECT_EQ(a + (-a), ResidueVector::zero(3));
  EXPECT_EQ(4 * a, ResidueVector::zero(3));
  EXPECT_EQ(3 * a, (ResidueVector{Rational(3, 4), Rational(1, 2), Rational(0)}));
  // ord(x) is the least l > 0 with l x = 0
  for (std::int64_t l = 1; l < ord(b); ++l) EXPECT_NE(l * b, ResidueVector::zero(3));
  EXPECT_EQ(ord(b) * b, ResidueVector::zero(3));
}

TEST(Residue, Blocks) {
  const auto x = ResidueVector::from_blocks({{Rational(1, 2), 2}, {Rational(1, 3), 3}});
  ASSERT_EQ(x.size(), 5u);
  EXPECT_EQ(x[1], Rational(1, 2));
  EXPECT_EQ(x[4], Rational(1, 3));
  EXPECT_EQ(ht(x), Rational(2));
  EXPECT_EQ(x.denominator(), 6);
}
