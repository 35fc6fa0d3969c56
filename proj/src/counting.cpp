#include "gorenstein/counting.hpp"

#include <map>

#include "gorenstein/numtheory.hpp"

namespace gorenstein {

namespace {

BigInt count_M_memo(std::int64_t v, std::map<std::int64_t, BigInt>& memo) {
  if (v == 1) return 1;
  if (auto it = memo.find(v); it != memo.end()) return it->second;
  BigInt total = 0;
  for (auto n : divisors(v))
    if (n != v) total += count_M_memo(n, memo);
  memo.emplace(v, total);
  return total;
}

void extend_chains(std::int64_t current, std::int64_t v, std::vector<std::int64_t>& chain,
                   std::vector<std::vector<std::int64_t>>& out) {
  if (current == v) {
    out.push_back(chain);
    return;
  }
  for (auto next : divisors(v)) {
    if (next <= current || next % current != 0) continue;
    chain.push_back(next);
    extend_chains(next, v, chain, out);
    chain.pop_back();
  }
}

}  // namespace

DivisorLattice DivisorLattice::of(std::int64_t v) {
  DivisorLattice lattice;
  lattice.base = v;
  lattice.divisors = gorenstein::divisors(v);
  for (auto a : lattice.divisors)
    for (auto b : lattice.divisors)
      if (b > a && b % a == 0 && is_prime(b / a)) lattice.covers.emplace_back(a, b);
  return lattice;
}

std::vector<std::vector<std::int64_t>> chains_to(std::int64_t v) {
  std::vector<std::vector<std::int64_t>> out;
  if (v < 2) return out;
  std::vector<std::int64_t> chain;
  extend_chains(1, v, chain, out);
  return out;
}

BigInt count_M(std::int64_t v) {
  if (v < 1) throw Error(ErrorKind::InvalidParams, "count_M: need v >= 1");
  std::map<std::int64_t, BigInt> memo;
  return count_M_memo(v, memo);
}

BigInt ordered_bell(int t) {
  if (t < 0) throw Error(ErrorKind::InvalidParams, "ordered_bell: need t >= 0");
  std::vector<BigInt> a{1};
  std::vector<BigInt> row{1};  // binomial row for the current t
  for (int n = 1; n <= t; ++n) {
    std::vector<BigInt> next(static_cast<std::size_t>(n) + 1, 1);
    for (int i = 1; i < n; ++i) next[i] = row[i - 1] + row[i];
    row = std::move(next);
    BigInt sum = 0;
    for (int i = 0; i < n; ++i) sum += row[i] * a[i];
    a.push_back(sum);
  }
  return a[static_cast<std::size_t>(t)];
}

std::optional<std::int64_t> known_N(std::int64_t v, std::int64_t k) {
  if (v < 2 || k < 0) return std::nullopt;
  const auto f = factorize(v);
  if (f.size() == 1 && f[0].second == 1) return 1;
  if (f.size() == 1 && f[0].second == 2) return 3;
  if (f.size() == 2 && f[0].second == 1 && f[1].second == 1) return 5;
  return std::nullopt;
}

}  // namespace gorenstein
