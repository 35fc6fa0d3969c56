#ifndef GORENSTEIN_LAMBDA_HPP
#define GORENSTEIN_LAMBDA_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gorenstein/abelian.hpp"
#include "gorenstein/residue.hpp"
#include "gorenstein/simplex.hpp"

namespace gorenstein {

enum class Strictness {
  Lenient,  // accept any finite subgroup
  Strict,   // reject unless every element has integer height
};

/// A finite subgroup of (Q/Z)^ambient with all of its elements enumerated.
///
/// Elements are stored as numerator vectors over one common denominator
/// (the lcm of all coordinate denominators) and kept sorted, so two groups
/// compare equal exactly when they have the same ambient length and the
/// same element set.
class LambdaGroup {
 public:
  /// The zero subgroup of (Q/Z)^ambient.
  static LambdaGroup trivial(std::size_t ambient);

  /// Closure of `generators` under addition mod 1. Throws InvalidParams on
  /// a length mismatch and, in strict mode, NonIntegralHeight.
  static LambdaGroup from_generators(std::size_t ambient, std::span<const ResidueVector> generators,
                                     Strictness strictness = Strictness::Strict);

  std::size_t ambient() const { return ambient_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<ResidueVector>& generators() const { return generators_; }

  std::int64_t denominator() const { return denominator_; }
  /// Element i as numerators over denominator(); index 0 is the zero element.
  const std::vector<std::int64_t>& numerators(std::size_t i) const { return elements_[i]; }
  ResidueVector element(std::size_t i) const;
  std::vector<ResidueVector> elements() const;

  Rational height(std::size_t i) const;
  bool has_integral_heights() const;
  bool contains(const ResidueVector& v) const;

  friend bool operator==(const LambdaGroup& a, const LambdaGroup& b) {
    return a.ambient_ == b.ambient_ && a.denominator_ == b.denominator_ &&
           a.elements_ == b.elements_;
  }

  friend LambdaGroup direct_sum(const LambdaGroup& a, const LambdaGroup& b);

 private:
  LambdaGroup(std::size_t ambient, std::vector<ResidueVector> generators, std::int64_t denominator,
              std::vector<std::vector<std::int64_t>> elements);

  std::size_t ambient_ = 0;
  std::vector<ResidueVector> generators_;
  std::int64_t denominator_ = 1;
  std::vector<std::vector<std::int64_t>> elements_;
};

/// {lambda in (Q/Z)^{d+1} : lambda * M integral}, M the homogenized vertex
/// matrix. Generators come from the Smith form S = U M V: row i of U
/// divided by s_i, for every s_i > 1.
LambdaGroup lambda_of(const LatticeSimplex& s);

/// Coordinates that vanish on every element. Non-empty exactly when the
/// simplex is a lattice pyramid.
std::vector<std::size_t> pyramid_coordinates(const LambdaGroup& g);

/// Isomorphism type of the group, read off its torsion counts.
AbstractGroup structure_of(const LambdaGroup& g);

/// All concatenations (x, y) with x in a, y in b.
LambdaGroup direct_sum(const LambdaGroup& a, const LambdaGroup& b);

/// A key that is equal for two groups exactly when one is the image of the
/// other under a permutation of the ambient coordinates.
///
/// Write the group as G = Z/n_1 + ... + Z/n_r. Every isomorphism
/// psi: G -> Lambda turns each ambient coordinate into a character of G,
/// recorded as its coefficient tuple (a_1, ..., a_r). The key is the
/// invariant factors followed by the lexicographically least sorted
/// multiset of coordinate characters over all such psi. Permuting
/// coordinates permutes the multiset, and precomposing with Aut(G) is
/// absorbed by the minimum, so the key is stable across runs and
/// platforms. Throws BudgetExceeded when the number of candidate
/// isomorphisms passes `max_isomorphisms`.
std::string canonical_form(const LambdaGroup& g, std::uint64_t max_isomorphisms = 20'000'000);

}  // namespace gorenstein

#endif  // GORENSTEIN_LAMBDA_HPP
