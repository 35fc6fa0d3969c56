#ifndef GORENSTEIN_RESIDUE_HPP
#define GORENSTEIN_RESIDUE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <boost/rational.hpp>

namespace gorenstein {

using Rational = boost::rational<std::int64_t>;

/// Canonical representative of x modulo 1, in [0, 1).
Rational reduce_mod_one(const Rational& x);

/// A run of `count` equal coordinates; used to spell out generators such
/// as (1/p, ..., 1/p, 1/q, ..., 1/q).
struct CoordinateBlock {
  Rational value;
  std::int64_t count;
};

/// An element of (Q/Z)^n, stored through its representatives in [0, 1).
class ResidueVector {
 public:
  ResidueVector() = default;
  explicit ResidueVector(std::vector<Rational> coords);
  ResidueVector(std::initializer_list<Rational> coords)
      : ResidueVector(std::vector<Rational>(coords)) {}

  static ResidueVector zero(std::size_t n);
  static ResidueVector from_blocks(const std::vector<CoordinateBlock>& blocks);

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  /// Least common denominator of the coordinates (1 for the zero vector).
  std::int64_t denominator() const;

  friend ResidueVector operator+(const ResidueVector& a, const ResidueVector& b);
  friend ResidueVector operator-(const ResidueVector& a);
  friend ResidueVector operator*(std::int64_t k, const ResidueVector& a);
  friend bool operator==(const ResidueVector& a, const ResidueVector& b) = default;
  friend bool operator<(const ResidueVector& a, const ResidueVector& b);

 private:
  std::vector<Rational> coords_;
};

/// Sum of the representatives in [0, 1).
Rational ht(const ResidueVector& v);

/// Least l > 0 with l * v = 0, i.e. the lcm of the coordinate denominators.
std::int64_t ord(const ResidueVector& v);

}  // namespace gorenstein

#endif  // GORENSTEIN_RESIDUE_HPP
