#include "gorenstein/abelian.hpp"

#include <algorithm>
#include <numeric>

#include "gorenstein/numtheory.hpp"

namespace gorenstein {

namespace {

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Partitions of n, parts descending, listed from [n] down to [1,...,1].
void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

// Combine one descending partition per prime into ascending invariant factors.
AbstractGroup assemble(const std::vector<std::pair<std::int64_t, int>>& primes,
                       const std::vector<std::vector<int>>& parts) {
  std::size_t rank = 0;
  for (const auto& p : parts) rank = std::max(rank, p.size());
  std::vector<std::int64_t> factors(rank, 1);
  // factors[rank-1-j] collects the j-th largest part of every prime
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = 0; j < parts[i].size(); ++j)
      factors[rank - 1 - j] *= ipow(primes[i].first, parts[i][j]);
  }
  return AbstractGroup{std::move(factors)};
}

}  // namespace

std::int64_t AbstractGroup::order() const {
  std::int64_t n = 1;
  for (auto f : factors) n *= f;
  return n;
}

std::int64_t AbstractGroup::exponent() const { return factors.empty() ? 1 : factors.back(); }

std::vector<std::int64_t> AbstractGroup::decode(std::int64_t index) const {
  std::vector<std::int64_t> coords(factors.size());
  for (std::size_t j = 0; j < factors.size(); ++j) {
    coords[j] = index % factors[j];
    index /= factors[j];
  }
  return coords;
}

std::int64_t AbstractGroup::encode(const std::vector<std::int64_t>& coords) const {
  std::int64_t index = 0;
  for (std::size_t j = factors.size(); j-- > 0;) index = index * factors[j] + mod(coords[j], factors[j]);
  return index;
}

std::vector<AbstractGroup> groups_of_order(std::int64_t v) {
  if (v < 1) return {};
  const auto primes = factorize(v);
  std::vector<std::vector<std::vector<int>>> per_prime;
  for (const auto& [p, e] : primes) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(e, e, cur, parts);
    per_prime.push_back(std::move(parts));
  }

  std::vector<AbstractGroup> out;
  std::vector<std::size_t> pick(primes.size(), 0);
  for (;;) {
    std::vector<std::vector<int>> chosen;
    for (std::size_t i = 0; i < primes.size(); ++i) chosen.push_back(per_prime[i][pick[i]]);
    out.push_back(assemble(primes, chosen));
    // odometer, last prime fastest
    std::size_t i = primes.size();
    while (i > 0) {
      --i;
      if (++pick[i] < per_prime[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
    if (primes.empty()) return out;
  }
}

AbstractGroup structure_from_torsion_counts(
    std::int64_t order, const std::function<std::int64_t(std::int64_t)>& killed_by) {
  const auto primes = factorize(order);
  std::vector<std::vector<int>> parts;
  for (const auto& [p, e] : primes) {
    // ranks[i] = #{j : lambda_j >= i+1} = log_p(N(p^{i+1}) / N(p^i))
    std::vector<int> ranks;
    std::int64_t prev = 1;
    for (int i = 1; i <= e; ++i) {
      std::int64_t cur = killed_by(ipow(p, i));
      int r = 0;
      for (std::int64_t q = cur / prev; q > 1; q /= p) ++r;
      ranks.push_back(r);
      prev = cur;
    }
    // conjugate partition
    std::vector<int> lambda;
    const int rank = ranks.empty() ? 0 : ranks.front();
    for (int j = 0; j < rank; ++j) {
      int len = 0;
      for (int r : ranks)
        if (r > j) ++len;
      lambda.push_back(len);
    }
    parts.push_back(std::move(lambda));
  }
  return assemble(primes, parts);
}

std::vector<Character> characters(const AbstractGroup& g) {
  const std::int64_t n = g.order();
  const std::int64_t e = g.exponent();
  std::vector<std::vector<std::int64_t>> elements(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) elements[i] = g.decode(i);

  std::vector<Character> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t c = 0; c < n; ++c) {
    Character chi;
    chi.coeffs = g.decode(c);
    chi.values.resize(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < g.factors.size(); ++j)
        acc += chi.coeffs[j] * elements[i][j] * (e / g.factors[j]);
      chi.values[i] = mod(acc, e);
    }
    std::int64_t order = 1;
    for (std::size_t j = 0; j < g.factors.size(); ++j)
      order = std::lcm(order, g.factors[j] / std::gcd(chi.coeffs[j], g.factors[j]));
    chi.order = order;
    out.push_back(std::move(chi));
  }
  return out;
}

}  // namespace gorenstein
