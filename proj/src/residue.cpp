#include "gorenstein/residue.hpp"

#include <algorithm>
#include <numeric>

#include "gorenstein/numtheory.hpp"

namespace gorenstein {

Rational reduce_mod_one(const Rational& x) {
  const std::int64_t den = x.denominator();
  return Rational(mod(x.numerator(), den), den);
}

ResidueVector::ResidueVector(std::vector<Rational> coords) : coords_(std::move(coords)) {
  for (auto& c : coords_) c = reduce_mod_one(c);
}

ResidueVector ResidueVector::zero(std::size_t n) {
  return ResidueVector(std::vector<Rational>(n, Rational(0)));
}

ResidueVector ResidueVector::from_blocks(const std::vector<CoordinateBlock>& blocks) {
  std::vector<Rational> coords;
  for (const auto& b : blocks) coords.insert(coords.end(), static_cast<std::size_t>(b.count), b.value);
  return ResidueVector(std::move(coords));
}

std::int64_t ResidueVector::denominator() const {
  std::int64_t d = 1;
  for (const auto& c : coords_) d = std::lcm(d, c.denominator());
  return d;
}

ResidueVector operator+(const ResidueVector& a, const ResidueVector& b) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return ResidueVector(std::move(out));
}

ResidueVector operator-(const ResidueVector& a) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return ResidueVector(std::move(out));
}

ResidueVector operator*(std::int64_t k, const ResidueVector& a) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * k;
  return ResidueVector(std::move(out));
}

bool operator<(const ResidueVector& a, const ResidueVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

Rational ht(const ResidueVector& v) {
  Rational sum(0);
  for (const auto& c : v.coords()) sum += c;
  return sum;
}

std::int64_t ord(const ResidueVector& v) { return v.denominator(); }

}  // namespace gorenstein
