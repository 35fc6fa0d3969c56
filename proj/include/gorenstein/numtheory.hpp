#ifndef GORENSTEIN_NUMTHEORY_HPP
#define GORENSTEIN_NUMTHEORY_HPP

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace gorenstein {

/// (prime, exponent) pairs in increasing prime order; trial division.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

/// Sorted divisors of n >= 1.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t a = 1; a * a <= n; ++a) {
    if (n % a != 0) continue;
    small.push_back(a);
    if (a != n / a) large.push_back(n / a);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Non-negative remainder.
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace gorenstein

#endif  // GORENSTEIN_NUMTHEORY_HPP
