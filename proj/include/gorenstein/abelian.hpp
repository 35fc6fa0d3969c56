#ifndef GORENSTEIN_ABELIAN_HPP
#define GORENSTEIN_ABELIAN_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace gorenstein {

/// Finite abelian group Z/n_1 + ... + Z/n_r in invariant-factor form,
/// n_1 | n_2 | ... | n_r, every n_i > 1. The trivial group has no factors.
///
/// Elements are addressed by a mixed-radix index: element x with
/// coordinates (x_1, ..., x_r), 0 <= x_i < n_i, has index
/// x_1 + n_1 * (x_2 + n_2 * (...)).
struct AbstractGroup {
  std::vector<std::int64_t> factors;

  std::int64_t order() const;
  /// Largest factor (1 for the trivial group).
  std::int64_t exponent() const;
  std::vector<std::int64_t> decode(std::int64_t index) const;
  std::int64_t encode(const std::vector<std::int64_t>& coords) const;
  bool is_cyclic() const { return factors.size() <= 1; }

  friend bool operator==(const AbstractGroup&, const AbstractGroup&) = default;
};

/// All isomorphism classes of abelian groups of order v. The cyclic group
/// comes first; the rest follow the exponent partitions prime by prime.
std::vector<AbstractGroup> groups_of_order(std::int64_t v);

/// Invariant factors of a group of the given order, recovered from the
/// counts N(m) = #{x : m x = 0} at prime powers m. `killed_by(m)` returns N(m).
AbstractGroup structure_from_torsion_counts(
    std::int64_t order, const std::function<std::int64_t(std::int64_t)>& killed_by);

/// Homomorphism G -> Q/Z, x |-> sum_j coeffs_j * x_j / n_j.
/// `values[index]` is the image of the element at `index`, written as a
/// numerator over G.exponent().
struct Character {
  std::vector<std::int64_t> coeffs;
  std::vector<std::int64_t> values;
  std::int64_t order = 1;

  bool is_zero() const { return order == 1; }
};

/// All |G| characters, the zero character first, coefficient tuples in
/// mixed-radix order.
std::vector<Character> characters(const AbstractGroup& g);

}  // namespace gorenstein

#endif  // GORENSTEIN_ABELIAN_HPP
