#ifndef GORENSTEIN_COUNTING_HPP
#define GORENSTEIN_COUNTING_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gorenstein/exactla.hpp"

namespace gorenstein {

/// Divisors of `base` ordered by divisibility.
struct DivisorLattice {
  std::int64_t base = 1;
  std::vector<std::int64_t> divisors;  // ascending
  /// (a, b) with b / a prime: the cover relations of the lattice.
  std::vector<std::pair<std::int64_t, std::int64_t>> covers;

  static DivisorLattice of(std::int64_t v);
};

/// Chains 1 < v_1 < ... < v_t = v with v_i | v_{i+1}, in lexicographic order.
std::vector<std::vector<std::int64_t>> chains_to(std::int64_t v);

/// Number of chains of D_v running from an element other than 1 up to v,
/// i.e. M(v) = sum of M(n) over proper divisors n of v, with M(1) = 1.
/// Does not depend on k.
BigInt count_M(std::int64_t v);

/// a(0) = 1, a(t) = sum_{i<t} C(t, i) a(i).
BigInt ordered_bell(int t);

/// Number of classes where it is settled: 1 for v prime, 3 for v = p^2,
/// 5 for v = pq with p != q. Empty otherwise.
std::optional<std::int64_t> known_N(std::int64_t v, std::int64_t k);

}  // namespace gorenstein

#endif  // GORENSTEIN_COUNTING_HPP
