#include "gorenstein/lambda.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "gorenstein/numtheory.hpp"

namespace gorenstein {

namespace {

using Numerators = std::vector<std::int64_t>;

Numerators scaled(const ResidueVector& v, std::int64_t denominator) {
  Numerators out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = v[i].numerator() * (denominator / v[i].denominator());
  return out;
}

std::int64_t element_order(const Numerators& x, std::int64_t denominator) {
  std::int64_t g = denominator;
  for (auto c : x) g = std::gcd(g, c);
  return denominator / g;
}

}  // namespace

LambdaGroup::LambdaGroup(std::size_t ambient, std::vector<ResidueVector> generators,
                         std::int64_t denominator, std::vector<std::vector<std::int64_t>> elements)
    : ambient_(ambient),
      generators_(std::move(generators)),
      denominator_(denominator),
      elements_(std::move(elements)) {}

LambdaGroup LambdaGroup::trivial(std::size_t ambient) {
  return LambdaGroup(ambient, {}, 1, {Numerators(ambient, 0)});
}

LambdaGroup LambdaGroup::from_generators(std::size_t ambient, std::span<const ResidueVector> generators,
                                         Strictness strictness) {
  std::int64_t denominator = 1;
  for (const auto& g : generators) {
    if (g.size() != ambient)
      throw Error(ErrorKind::InvalidParams, "generator length " + std::to_string(g.size()) +
                                                " does not match ambient " + std::to_string(ambient));
    denominator = std::lcm(denominator, g.denominator());
  }
  std::vector<Numerators> gens;
  for (const auto& g : generators) gens.push_back(scaled(g, denominator));

  std::set<Numerators> seen{Numerators(ambient, 0)};
  std::vector<Numerators> frontier{Numerators(ambient, 0)};
  while (!frontier.empty()) {
    std::vector<Numerators> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Numerators y(ambient);
        for (std::size_t i = 0; i < ambient; ++i) y[i] = (x[i] + g[i]) % denominator;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }

  LambdaGroup group(ambient, {generators.begin(), generators.end()}, denominator,
                    {seen.begin(), seen.end()});
  if (strictness == Strictness::Strict && !group.has_integral_heights())
    throw Error(ErrorKind::NonIntegralHeight, "group has an element of non-integral height");
  return group;
}

ResidueVector LambdaGroup::element(std::size_t i) const {
  std::vector<Rational> coords(ambient_);
  for (std::size_t j = 0; j < ambient_; ++j) coords[j] = Rational(elements_[i][j], denominator_);
  return ResidueVector(std::move(coords));
}

std::vector<ResidueVector> LambdaGroup::elements() const {
  std::vector<ResidueVector> out;
  out.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) out.push_back(element(i));
  return out;
}

Rational LambdaGroup::height(std::size_t i) const {
  const auto& x = elements_[i];
  return Rational(std::accumulate(x.begin(), x.end(), std::int64_t{0}), denominator_);
}

bool LambdaGroup::has_integral_heights() const {
  for (const auto& x : elements_) {
    if (std::accumulate(x.begin(), x.end(), std::int64_t{0}) % denominator_ != 0) return false;
  }
  return true;
}

bool LambdaGroup::contains(const ResidueVector& v) const {
  if (v.size() != ambient_ || denominator_ % v.denominator() != 0) return false;
  return std::binary_search(elements_.begin(), elements_.end(), scaled(v, denominator_));
}

LambdaGroup lambda_of(const LatticeSimplex& s) {
  const IntMatrix m = s.homogenized();
  const auto smith = snf(m);
  const Eigen::Index n = m.rows();
  std::vector<ResidueVector> gens;
  for (Eigen::Index i = 0; i < n; ++i) {
    const BigInt& si = smith.s(i, i);
    if (si == 1) continue;
    if (si > std::numeric_limits<std::int64_t>::max())
      throw Error(ErrorKind::BudgetExceeded, "lambda_of: invariant factor exceeds 64-bit range");
    const auto den = si.convert_to<std::int64_t>();
    std::vector<Rational> coords(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
      BigInt r = smith.u(i, j) % si;
      if (r < 0) r += si;
      coords[j] = Rational(r.convert_to<std::int64_t>(), den);
    }
    gens.emplace_back(std::move(coords));
  }
  return LambdaGroup::from_generators(static_cast<std::size_t>(n), gens, Strictness::Strict);
}

std::vector<std::size_t> pyramid_coordinates(const LambdaGroup& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.ambient(); ++i) {
    bool all_zero = true;
    for (std::size_t e = 0; e < g.order() && all_zero; ++e) all_zero = g.numerators(e)[i] == 0;
    if (all_zero) out.push_back(i);
  }
  return out;
}

AbstractGroup structure_of(const LambdaGroup& g) {
  const std::int64_t d = g.denominator();
  return structure_from_torsion_counts(static_cast<std::int64_t>(g.order()), [&](std::int64_t m) {
    std::int64_t count = 0;
    for (std::size_t e = 0; e < g.order(); ++e) {
      const auto& x = g.numerators(e);
      if (std::all_of(x.begin(), x.end(), [&](std::int64_t c) { return (m * c) % d == 0; })) ++count;
    }
    return count;
  });
}

LambdaGroup direct_sum(const LambdaGroup& a, const LambdaGroup& b) {
  const std::int64_t d = std::lcm(a.denominator_, b.denominator_);
  const std::int64_t sa = d / a.denominator_;
  const std::int64_t sb = d / b.denominator_;
  const std::size_t ambient = a.ambient_ + b.ambient_;

  std::vector<Numerators> elements;
  elements.reserve(a.order() * b.order());
  for (const auto& x : a.elements_) {
    for (const auto& y : b.elements_) {
      Numerators z;
      z.reserve(ambient);
      for (auto c : x) z.push_back(c * sa);
      for (auto c : y) z.push_back(c * sb);
      elements.push_back(std::move(z));
    }
  }
  std::sort(elements.begin(), elements.end());

  std::vector<ResidueVector> gens;
  for (const auto& g : a.generators_) {
    auto coords = g.coords();
    coords.resize(ambient, Rational(0));
    gens.emplace_back(std::move(coords));
  }
  for (const auto& g : b.generators_) {
    std::vector<Rational> coords(a.ambient_, Rational(0));
    coords.insert(coords.end(), g.coords().begin(), g.coords().end());
    gens.emplace_back(std::move(coords));
  }
  return LambdaGroup(ambient, std::move(gens), d, std::move(elements));
}

std::string canonical_form(const LambdaGroup& g, std::uint64_t max_isomorphisms) {
  const AbstractGroup structure = structure_of(g);
  const auto& factors = structure.factors;
  const std::size_t rank = factors.size();
  const std::int64_t den = g.denominator();
  const std::size_t ambient = g.ambient();

  std::string key;
  for (std::size_t j = 0; j < rank; ++j) key += (j ? "," : "") + std::to_string(factors[j]);
  key += ";";

  std::vector<std::int64_t> best;
  if (rank == 0) {
    best.assign(ambient, 0);
  } else {
    std::vector<std::vector<std::size_t>> candidates(rank);
    for (std::size_t e = 0; e < g.order(); ++e) {
      const std::int64_t o = element_order(g.numerators(e), den);
      for (std::size_t j = 0; j < rank; ++j)
        if (o == factors[j]) candidates[j].push_back(e);
    }

    auto index_of = [&](const Numerators& x) {
      // elements are sorted; the lookup always succeeds inside the group
      std::size_t lo = 0, hi = g.order();
      while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (g.numerators(mid) < x) lo = mid + 1; else hi = mid;
      }
      return lo;
    };

    std::vector<std::size_t> chosen(rank);
    std::uint64_t tried = 0;
    std::vector<std::int64_t> columns(ambient);

    // span[j] = subgroup generated by chosen[0..j-1], as element indices
    std::vector<std::vector<std::size_t>> span(rank + 1);
    span[0] = {0};

    auto search = [&](auto&& self, std::size_t j) -> void {
      if (j == rank) {
        for (std::size_t i = 0; i < ambient; ++i) {
          std::int64_t code = 0;
          for (std::size_t t = rank; t-- > 0;)
            code = code * factors[t] + g.numerators(chosen[t])[i] * factors[t] / den;
          columns[i] = code;
        }
        std::sort(columns.begin(), columns.end());
        if (best.empty() || columns < best) best = columns;
        return;
      }
      for (std::size_t cand : candidates[j]) {
        if (++tried > max_isomorphisms)
          throw Error(ErrorKind::BudgetExceeded, "canonical_form: too many candidate isomorphisms");
        // extend the span by multiples of cand; reject if it collides
        std::vector<std::size_t> next;
        next.reserve(span[j].size() * static_cast<std::size_t>(factors[j]));
        Numerators shift(ambient, 0);
        bool injective = true;
        std::set<std::size_t> seen;
        for (std::int64_t c = 0; c < factors[j] && injective; ++c) {
          for (std::size_t base : span[j]) {
            Numerators x(ambient);
            const auto& b = g.numerators(base);
            for (std::size_t i = 0; i < ambient; ++i) x[i] = (b[i] + shift[i]) % den;
            std::size_t idx = index_of(x);
            if (!seen.insert(idx).second) {
              injective = false;
              break;
            }
            next.push_back(idx);
          }
          const auto& step = g.numerators(cand);
          for (std::size_t i = 0; i < ambient; ++i) shift[i] = (shift[i] + step[i]) % den;
        }
        if (!injective) continue;
        chosen[j] = cand;
        span[j + 1] = std::move(next);
        self(self, j + 1);
      }
    };
    search(search, 0);
  }

  for (std::size_t i = 0; i < best.size(); ++i) key += (i ? "," : "") + std::to_string(best[i]);
  return key;
}

}  // namespace gorenstein
