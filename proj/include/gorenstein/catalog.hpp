#ifndef GORENSTEIN_CATALOG_HPP
#define GORENSTEIN_CATALOG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gorenstein/lambda.hpp"
#include "gorenstein/simplex.hpp"

namespace gorenstein {

enum class Family {
  Prime,    // (1/p, ..., 1/p), p(k+1) coordinates
  Divisor,  // (u/v x (v-1)(k+1), 1/v x u(k+1)) for a proper divisor u of v
  Join,     // direct sum of two families
  P2Case1,
  P2Case2,
  P2Case3,
  PqCase1,
  PqCase2,
  PqCase3,
  PqCase4,
  PqCase5,
  Chain,    // generator built from a divisor chain v_1 | ... | v_t
};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// One explicit construction: a family plus its integer parameters.
/// Parameter names: p, q, v, u, k. Chains live in `chain`, the two factors
/// of a join in `parts`.
struct FamilySpec {
  Family family = Family::Prime;
  std::map<std::string, std::int64_t> params;
  std::vector<std::int64_t> chain;
  std::vector<FamilySpec> parts;

  static FamilySpec prime(std::int64_t p, std::int64_t k);
  static FamilySpec divisor(std::int64_t v, std::int64_t u, std::int64_t k);
  static FamilySpec join(FamilySpec first, FamilySpec second);
  static FamilySpec p2(int which, std::int64_t p, std::int64_t k);
  static FamilySpec pq(int which, std::int64_t p, std::int64_t q, std::int64_t k);
  static FamilySpec chain_of(std::vector<std::int64_t> chain, std::int64_t k);

  std::int64_t param(const std::string& name) const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// "pq-case2 p=2 q=3 k=0", "chain 2,4 k=1", "join(prime p=2 k=0, prime p=3 k=1)".
std::string describe(const FamilySpec& f);

/// Throws InvalidParams (InvalidChain for chains) when the parameters are
/// outside the family's domain.
void validate(const FamilySpec& f);

/// Normalized volume v of the family.
std::int64_t family_volume(const FamilySpec& f);
/// The k with delta = 1 + t^{k+1} + ... + t^{(v-1)(k+1)}.
std::int64_t family_k(const FamilySpec& f);
/// Dimension d (ambient length minus one).
std::int64_t family_dimension(const FamilySpec& f);

/// Multiplicities s_1, ..., s_t of the chain generator:
/// s_i = (v_t / v_{i-1} - v_t / v_{i+1})(k+1) for i < t, s_t = (v_t / v_{t-1})(k+1),
/// with v_0 = 1. Throws InvalidChain.
std::vector<std::int64_t> chain_multiplicities(const std::vector<std::int64_t>& chain, std::int64_t k);

/// s_i coordinates equal to 1/v_i for every i.
ResidueVector chain_generator(const std::vector<std::int64_t>& chain, std::int64_t k);

/// Generator-form group of the family.
LambdaGroup construct_group(const FamilySpec& f);

bool has_vertex_form(const FamilySpec& f);

/// Vertex form of the p^2 and pq families (Delta(A) or Delta(B, C)).
/// Throws NoVertexForm otherwise.
LatticeSimplex construct_simplex(const FamilySpec& f);

/// The complete list of families for v = p^2 (three) or v = pq (five,
/// p < q), in case order. Throws UnsupportedVolume for other v.
std::vector<FamilySpec> expected_families(std::int64_t v, std::int64_t k);
std::vector<LambdaGroup> expected_classes(std::int64_t v, std::int64_t k);

/// Families a search result at (v, k) can be matched against: the
/// prime / p^2 / pq families where they apply, then every chain family.
std::vector<FamilySpec> reference_families(std::int64_t v, std::int64_t k);

}  // namespace gorenstein

#endif  // GORENSTEIN_CATALOG_HPP
