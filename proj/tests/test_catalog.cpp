#include <gtest/gtest.h>

#include "gorenstein/catalog.hpp"
#include "gorenstein/counting.hpp"
#include "gorenstein/delta.hpp"
#include "gorenstein/numtheory.hpp"

using namespace gorenstein;

namespace {

LambdaGroup generated(const ResidueVector& x) {
  return LambdaGroup::from_generators(x.size(), std::span(&x, 1), Strictness::Strict);
}

bool hits_target(const LambdaGroup& g, std::int64_t v, std::int64_t k) {
  const auto d = static_cast<std::int64_t>(g.ambient()) - 1;
  return pyramid_coordinates(g).empty() && static_cast<std::int64_t>(g.order()) == v &&
         delta_of(g) == target(v, k, d);
}

std::vector<FamilySpec> all_small_families() {
  std::vector<FamilySpec> out;
  const std::int64_t primes[] = {2, 3, 5, 7};
  for (std::int64_t k = 0; k <= 2; ++k) {
    for (auto p : primes) {
      out.push_back(FamilySpec::prime(p, k));
      for (int c = 1; c <= 3; ++c) out.push_back(FamilySpec::p2(c, p, k));
      for (auto q : primes)
        if (q != p)
          for (int c = 1; c <= 5; ++c) out.push_back(FamilySpec::pq(c, p, q, k));
    }
    for (std::int64_t v : {4, 6, 8, 9, 12})
      for (auto u : divisors(v))
        if (u < v) out.push_back(FamilySpec::divisor(v, u, k));
  }
  return out;
}

}  // namespace

TEST(Catalog, Examples) {
  const auto prime = construct_group(FamilySpec::prime(3, 0));
  EXPECT_EQ(prime, generated(ResidueVector::from_blocks({{Rational(1, 3), 3}})));
  EXPECT_EQ(delta_of(prime).coeffs(), (std::vector<std::int64_t>{1, 1, 1}));

  EXPECT_EQ(construct_group(FamilySpec::divisor(4, 2, 0)),
            generated(ResidueVector::from_blocks({{Rational(1, 2), 3}, {Rational(1, 4), 2}})));

  const auto pq2 = construct_group(FamilySpec::pq(2, 2, 3, 0));
  EXPECT_EQ(pq2, generated(ResidueVector::from_blocks({{Rational(1, 2), 2}, {Rational(1, 3), 6}})));
  EXPECT_EQ(family_dimension(FamilySpec::pq(2, 2, 3, 0)), 7);
}

TEST(Catalog, EveryFamilyHitsItsTarget) {
  for (const auto& f : all_small_families()) {
    validate(f);
    const auto g = construct_group(f);
    EXPECT_TRUE(hits_target(g, family_volume(f), family_k(f))) << describe(f);
    EXPECT_EQ(static_cast<std::int64_t>(g.ambient()) - 1, family_dimension(f)) << describe(f);
  }
}

TEST(Catalog, DimensionFormulas) {
  for (std::int64_t p : {2, 3, 5}) {
    for (std::int64_t k = 0; k <= 2; ++k) {
      const std::int64_t r = k + 1;
      EXPECT_EQ(family_dimension(FamilySpec::p2(1, p, k)), p * p * r - 1);
      EXPECT_EQ(family_dimension(FamilySpec::p2(2, p, k)), (p * p + p - 1) * r - 1);
      EXPECT_EQ(family_dimension(FamilySpec::p2(3, p, k)), p * (p + 1) * r - 1);
      EXPECT_EQ(family_dimension(FamilySpec::prime(p, k)), p * r - 1);
    }
  }
  // p = 2, q = 3, k = 0
  const std::int64_t dims[] = {5, 7, 8, 6, 7};
  for (int c = 1; c <= 5; ++c) EXPECT_EQ(family_dimension(FamilySpec::pq(c, 2, 3, 0)), dims[c - 1]) << c;
}

TEST(Catalog, ExpectedFamiliesArePairwiseDistinct) {
  for (std::int64_t v : {4, 6, 9, 10, 15, 25}) {
    for (std::int64_t k = 0; k <= 1; ++k) {
      std::set<std::string> keys;
      for (const auto& g : expected_classes(v, k)) keys.insert(canonical_form(g));
      EXPECT_EQ(keys.size(), v == 4 || v == 9 || v == 25 ? 3u : 5u) << v;
    }
  }
  EXPECT_THROW(expected_families(8, 0), Error);
  EXPECT_THROW(expected_families(30, 0), Error);
}

TEST(Chain, Multiplicities) {
  EXPECT_EQ(chain_multiplicities({4}, 0), (std::vector<std::int64_t>{4}));
  EXPECT_EQ(chain_multiplicities({2, 4}, 0), (std::vector<std::int64_t>{3, 2}));
  EXPECT_EQ(chain_multiplicities({2, 4, 8}, 0), (std::vector<std::int64_t>{6, 3, 2}));
  EXPECT_EQ(chain_generator({4}, 0), ResidueVector::from_blocks({{Rational(1, 4), 4}}));
  EXPECT_EQ(chain_generator({2, 4}, 0), ResidueVector::from_blocks({{Rational(1, 2), 3}, {Rational(1, 4), 2}}));
  EXPECT_EQ(chain_generator({2, 4, 8}, 0).size(), 11u);
  EXPECT_EQ(construct_group(FamilySpec::chain_of({2, 4}, 0)), construct_group(FamilySpec::divisor(4, 2, 0)));
}

TEST(Chain, InvalidChains) {
  EXPECT_THROW(chain_multiplicities({}, 0), Error);
  EXPECT_THROW(chain_multiplicities({2, 3}, 0), Error);
  EXPECT_THROW(chain_multiplicities({1, 2}, 0), Error);
  EXPECT_THROW(chain_multiplicities({4, 4}, 0), Error);
  try {
    chain_multiplicities({2, 3}, 0);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidChain);
  }
}

TEST(Chain, EveryChainUpToThirtyHitsTarget) {
  for (std::int64_t v = 2; v <= 30; ++v) {
    std::set<std::string> keys;
    for (const auto& chain : chains_to(v)) {
      for (std::int64_t k = 0; k <= 1; ++k) {
        const auto g = generated(chain_generator(chain, k));
        EXPECT_TRUE(hits_target(g, v, k)) << v;
        if (k == 0) keys.insert(canonical_form(g));
      }
    }
    // distinct chains give distinct classes
    EXPECT_EQ(BigInt(keys.size()), count_M(v)) << v;
  }
}

TEST(Join, DecompositionsOfTheTwoGeneratorCases) {
  for (std::int64_t p : {2, 3, 5}) {
    for (std::int64_t k = 0; k <= 1; ++k) {
      const auto joined = FamilySpec::join(FamilySpec::prime(p, k), FamilySpec::prime(p, p * (k + 1) - 1));
      validate(joined);
      EXPECT_EQ(canonical_form(construct_group(joined)), canonical_form(construct_group(FamilySpec::p2(3, p, k))));
      EXPECT_EQ(canonical_form(construct_group(FamilySpec::divisor(p * p, p, k))),
                canonical_form(construct_group(FamilySpec::p2(2, p, k))));
    }
  }
  for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{2, 3}, {2, 5}, {3, 5}}) {
    for (std::int64_t k = 0; k <= 1; ++k) {
      const auto two = FamilySpec::join(FamilySpec::prime(p, k), FamilySpec::prime(q, p * (k + 1) - 1));
      const auto three = FamilySpec::join(FamilySpec::prime(q, k), FamilySpec::prime(p, q * (k + 1) - 1));
      EXPECT_EQ(canonical_form(construct_group(two)), canonical_form(construct_group(FamilySpec::pq(2, p, q, k))));
      EXPECT_EQ(canonical_form(construct_group(three)), canonical_form(construct_group(FamilySpec::pq(3, p, q, k))));
      EXPECT_EQ(canonical_form(construct_group(FamilySpec::divisor(p * q, p, k))),
                canonical_form(construct_group(FamilySpec::pq(4, p, q, k))));
      EXPECT_EQ(canonical_form(construct_group(FamilySpec::divisor(p * q, q, k))),
                canonical_form(construct_group(FamilySpec::pq(5, p, q, k))));
    }
  }
}

TEST(Join, RejectsIncompatibleFactors) {
  EXPECT_THROW(validate(FamilySpec::join(FamilySpec::prime(2, 0), FamilySpec::prime(2, 0))), Error);
}

TEST(Validate, Parameters) {
  EXPECT_THROW(validate(FamilySpec::prime(4, 0)), Error);
  EXPECT_THROW(validate(FamilySpec::pq(1, 3, 3, 0)), Error);
  EXPECT_THROW(validate(FamilySpec::divisor(6, 4, 0)), Error);
  EXPECT_THROW(validate(FamilySpec::prime(3, -1)), Error);
  EXPECT_THROW(FamilySpec::pq(6, 2, 3, 0), Error);
}

TEST(VertexForm, Examples) {
  EXPECT_EQ(construct_simplex(FamilySpec::p2(1, 2, 0)).vertices(), family_A({1, 1, 4}).vertices());
  EXPECT_EQ(construct_simplex(FamilySpec::p2(3, 2, 0)).vertices(), family_BC({1, 2}, {2, 2, 1, 1, 2}).vertices());
  EXPECT_EQ(construct_simplex(FamilySpec::pq(1, 2, 3, 0)).vertices(), family_A({1, 1, 1, 1, 6}).vertices());
  EXPECT_FALSE(has_vertex_form(FamilySpec::prime(3, 0)));
  EXPECT_THROW(construct_simplex(FamilySpec::prime(3, 0)), Error);
}

TEST(VertexForm, MatchesGeneratorForm) {
  for (const auto& f : all_small_families()) {
    if (!has_vertex_form(f) || family_dimension(f) > 40) continue;
    const auto s = construct_simplex(f);
    EXPECT_EQ(s.volume(), family_volume(f)) << describe(f);
    EXPECT_EQ(canonical_form(lambda_of(s)), canonical_form(construct_group(f))) << describe(f);
  }
}
