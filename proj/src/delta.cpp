#include "gorenstein/delta.hpp"

#include <algorithm>
#include <numeric>

namespace gorenstein {

DeltaPolynomial::DeltaPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_.front() != 1)
    throw Error(ErrorKind::InvalidParams, "delta polynomial must start with delta_0 = 1");
  if (std::any_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c < 0; }))
    throw Error(ErrorKind::InvalidParams, "delta polynomial has a negative coefficient");
}

std::int64_t DeltaPolynomial::degree() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) s = static_cast<std::int64_t>(i);
  return s;
}

std::int64_t DeltaPolynomial::value_at_one() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), std::int64_t{0});
}

DeltaPolynomial delta_of(const LambdaGroup& g) {
  std::vector<std::int64_t> coeffs(g.ambient(), 0);
  for (std::size_t e = 0; e < g.order(); ++e) {
    const Rational h = g.height(e);
    if (h.denominator() != 1)
      throw Error(ErrorKind::NonIntegralHeight, "element of non-integral height");
    // heights of representatives in [0,1) are < ambient
    coeffs[static_cast<std::size_t>(h.numerator())] += 1;
  }
  if (coeffs.empty()) coeffs.push_back(1);
  return DeltaPolynomial(std::move(coeffs));
}

bool is_gorenstein(const DeltaPolynomial& p) {
  const auto s = static_cast<std::size_t>(p.degree());
  for (std::size_t i = 0; i <= s / 2; ++i)
    if (p[i] != p[s - i]) return false;
  return true;
}

std::int64_t gorenstein_index(const DeltaPolynomial& p, std::int64_t d) {
  if (!is_gorenstein(p)) throw Error(ErrorKind::NotGorenstein, "delta polynomial is not palindromic");
  return d + 1 - p.degree();
}

DeltaPolynomial target(std::int64_t v, std::int64_t k, std::int64_t d) {
  if (v < 1 || k < 0) throw Error(ErrorKind::InvalidParams, "target: need v >= 1 and k >= 0");
  if (d < (v - 1) * (k + 1))
    throw Error(ErrorKind::DimensionTooSmall,
                "target: dimension " + std::to_string(d) + " below (v-1)(k+1)");
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(d + 1), 0);
  for (std::int64_t j = 0; j < v; ++j) coeffs[static_cast<std::size_t>(j * (k + 1))] = 1;
  return DeltaPolynomial(std::move(coeffs));
}

DeltaPolynomial convolve(const DeltaPolynomial& a, const DeltaPolynomial& b, std::size_t length) {
  std::vector<std::int64_t> out(length, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size() && i + j < length; ++j) out[i + j] += a[i] * b[j];
  return DeltaPolynomial(std::move(out));
}

std::vector<std::int64_t> ehrhart_numerator(const LatticeSimplex& s, std::uint64_t node_budget) {
  const auto d = static_cast<std::size_t>(s.dim());
  const std::size_t horizon = 2 * d + 2;
  std::vector<std::int64_t> counts(horizon);
  for (std::size_t n = 0; n < horizon; ++n)
    counts[n] = static_cast<std::int64_t>(count_points(s, static_cast<std::int64_t>(n), node_budget));
  // (1 - t)^{d+1} coefficients
  std::vector<std::int64_t> binom(d + 2, 0);
  binom[0] = 1;
  for (std::size_t i = 1; i <= d + 1; ++i)
    for (std::size_t j = i; j > 0; --j) binom[j] += binom[j - 1];
  std::vector<std::int64_t> numerator(horizon, 0);
  for (std::size_t m = 0; m < horizon; ++m) {
    for (std::size_t j = 0; j <= std::min(m, d + 1); ++j) {
      const std::int64_t sign = (j % 2 == 0) ? 1 : -1;
      numerator[m] += sign * binom[j] * counts[m - j];
    }
  }
  return numerator;
}

bool ehrhart_check(const LatticeSimplex& s, std::uint64_t node_budget) {
  auto numerator = ehrhart_numerator(s, node_budget);
  auto expected = delta_of(lambda_of(s)).coeffs();
  expected.resize(numerator.size(), 0);
  return numerator == expected;
}

std::string to_string(const DeltaPolynomial& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const std::int64_t c = p[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace gorenstein
