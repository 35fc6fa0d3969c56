#ifndef GORENSTEIN_DELTA_HPP
#define GORENSTEIN_DELTA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gorenstein/lambda.hpp"
#include "gorenstein/simplex.hpp"

namespace gorenstein {

/// delta_0 + delta_1 t + ... + delta_d t^d, stored densely up to degree d
/// (trailing zeros kept). delta_0 = 1 and all coefficients are >= 0.
class DeltaPolynomial {
 public:
  explicit DeltaPolynomial(std::vector<std::int64_t> coeffs);

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }
  /// d, i.e. number of stored coefficients minus one.
  std::int64_t dimension() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  /// Degree s of the last nonzero coefficient.
  std::int64_t degree() const;
  /// delta(1), the normalized volume.
  std::int64_t value_at_one() const;

  friend bool operator==(const DeltaPolynomial&, const DeltaPolynomial&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Coefficient i counts the elements of height i. One coefficient per
/// ambient coordinate. Throws NonIntegralHeight if a height is fractional.
DeltaPolynomial delta_of(const LambdaGroup& g);

/// Palindromic up to the last nonzero coefficient.
bool is_gorenstein(const DeltaPolynomial& p);

/// r = d + 1 - degree. Throws NotGorenstein.
std::int64_t gorenstein_index(const DeltaPolynomial& p, std::int64_t d);

/// 1 + t^{k+1} + ... + t^{(v-1)(k+1)} padded to degree d.
/// Throws DimensionTooSmall when d < (v-1)(k+1).
DeltaPolynomial target(std::int64_t v, std::int64_t k, std::int64_t d);

/// Coefficient-wise product, truncated/padded to `length` coefficients.
DeltaPolynomial convolve(const DeltaPolynomial& a, const DeltaPolynomial& b, std::size_t length);

/// Compares (1 - t)^{d+1} * sum_n |nS cap Z^d| t^n through 2d+2 terms with
/// delta_of(lambda_of(s)) followed by zeros. Point counting gives up with
/// BudgetExceeded once a single scan visits `node_budget` nodes.
bool ehrhart_check(const LatticeSimplex& s, std::uint64_t node_budget = 200'000'000);

/// The first 2d+2 coefficients of (1 - t)^{d+1} * Ehrhart series, computed
/// purely from lattice point counts.
std::vector<std::int64_t> ehrhart_numerator(const LatticeSimplex& s, std::uint64_t node_budget);

/// "1 + t^2 + 3t^4": ascending powers, zero terms dropped, unit
/// coefficients elided.
std::string to_string(const DeltaPolynomial& p);

}  // namespace gorenstein

#endif  // GORENSTEIN_DELTA_HPP
