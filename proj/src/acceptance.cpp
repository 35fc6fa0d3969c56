#include "gorenstein/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "gorenstein/catalog.hpp"
#include "gorenstein/classifier.hpp"
#include "gorenstein/counting.hpp"
#include "gorenstein/delta.hpp"
#include "gorenstein/numtheory.hpp"

namespace gorenstein {

namespace {

using Clock = std::chrono::steady_clock;

// Collects failures; a criterion passes when none were recorded.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    if (ok()) return std::to_string(checks_) + " checks";
    std::string s = std::to_string(failed_) + "/" + std::to_string(checks_) + " failed:";
    for (const auto& f : failures_) s += " [" + f + "]";
    return s;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

struct SearchCache {
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<ClassifiedGroup>> results;
  const std::vector<ClassifiedGroup>& get(std::int64_t v, std::int64_t k) {
    auto it = results.find({v, k});
    if (it == results.end()) it = results.emplace(std::make_pair(v, k), search(v, k)).first;
    return it->second;
  }
};

std::multiset<std::string> keys_of(const std::vector<ClassifiedGroup>& classes) {
  std::multiset<std::string> out;
  for (const auto& c : classes) out.insert(c.key);
  return out;
}

std::multiset<std::string> expected_keys(std::int64_t v, std::int64_t k) {
  std::multiset<std::string> out;
  for (const auto& g : expected_classes(v, k)) out.insert(canonical_form(g));
  return out;
}

std::string label(std::int64_t v, std::int64_t k) {
  return "v=" + std::to_string(v) + " k=" + std::to_string(k);
}

template <class F>
CriterionResult timed(int id, std::string title, double limit, F&& body) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  const auto t0 = Clock::now();
  Checker check;
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  check.expect(r.seconds < limit, "time limit " + std::to_string(static_cast<int>(limit)) + " s");
  r.passed = check.ok();
  r.detail = check.summary();
  return r;
}

void classify_against_expected(Checker& check, SearchCache& cache, std::int64_t v, std::int64_t k,
                               std::multiset<std::int64_t> dims) {
  const auto& classes = cache.get(v, k);
  check.expect(classes.size() == dims.size(), label(v, k) + ": " + std::to_string(classes.size()) + " classes");
  std::multiset<std::int64_t> found;
  for (const auto& c : classes) found.insert(c.dim);
  check.expect(found == dims, label(v, k) + ": dimensions");
  check.expect(keys_of(classes) == expected_keys(v, k), label(v, k) + ": canonical forms");
  for (const auto& c : classes) check.expect(c.matched_family.has_value(), label(v, k) + ": unmatched class " + c.key);
}

std::vector<FamilySpec> vertex_form_families(std::int64_t max_prime, std::int64_t max_k) {
  std::vector<FamilySpec> out;
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p <= max_prime; ++p)
    if (is_prime(p)) primes.push_back(p);
  for (std::int64_t k = 0; k <= max_k; ++k) {
    for (auto p : primes) {
      for (auto& f : expected_families(p * p, k))
        if (has_vertex_form(f)) out.push_back(f);
      for (auto q : primes) {
        if (q <= p) continue;
        for (auto& f : expected_families(p * q, k))
          if (has_vertex_form(f)) out.push_back(f);
      }
    }
  }
  return out;
}

LatticeSimplex random_simplex(std::mt19937_64& rng, std::int64_t max_dim, std::int64_t max_volume) {
  std::uniform_int_distribution<std::int64_t> dim_dist(1, max_dim);
  std::uniform_int_distribution<std::int64_t> coord(-2, 2);
  for (;;) {
    const std::int64_t d = dim_dist(rng);
    std::vector<std::vector<std::int64_t>> vertices(static_cast<std::size_t>(d + 1),
                                                    std::vector<std::int64_t>(static_cast<std::size_t>(d)));
    for (auto& row : vertices)
      for (auto& x : row) x = coord(rng);
    try {
      auto s = LatticeSimplex::from_vertices(vertices);
      if (s.volume() <= max_volume) return s;
    } catch (const Error&) {
    }
  }
}

// Gorenstein straight from the cone: the interior of the cone over the
// simplex is c + cone for one lattice point c. On the group side this says
// the interior representative of every element, coordinate by coordinate,
// is that of c plus the ordinary representative of the difference.
bool gorenstein_by_cone(const LambdaGroup& g) {
  const std::int64_t den = g.denominator();
  const std::size_t n = g.ambient();
  auto interior = [&](std::int64_t x) { return x == 0 ? den : x; };
  std::size_t best = 0;
  std::int64_t best_height = -1;
  for (std::size_t e = 0; e < g.order(); ++e) {
    std::int64_t h = 0;
    for (auto x : g.numerators(e)) h += interior(x);
    if (best_height < 0 || h < best_height) {
      best_height = h;
      best = e;
    }
  }
  const auto& c = g.numerators(best);
  for (std::size_t e = 0; e < g.order(); ++e) {
    const auto& x = g.numerators(e);
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t diff = ((x[i] - c[i]) % den + den) % den;
      if (interior(x[i]) != interior(c[i]) + diff) return false;
    }
  }
  return true;
}

DeltaPolynomial padded(const DeltaPolynomial& p, std::size_t length) {
  auto coeffs = p.coeffs();
  coeffs.resize(length, 0);
  return DeltaPolynomial(coeffs);
}

void property_checks(Checker& check, const LatticeSimplex& s, std::mt19937_64& rng, const std::string& name) {
  const auto g = lambda_of(s);
  const auto delta = delta_of(g);
  check.expect(delta[0] == 1, name + ": delta_0");
  check.expect(BigInt(delta.value_at_one()) == s.volume() && g.order() == static_cast<std::size_t>(delta.value_at_one()),
               name + ": delta(1) = Vol = |Lambda|");
  check.expect(g.has_integral_heights(), name + ": integral heights");

  std::vector<std::vector<std::int64_t>> rows;
  const auto& m = s.vertices();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<std::int64_t> row;
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).convert_to<std::int64_t>());
    rows.push_back(std::move(row));
  }
  std::shuffle(rows.begin(), rows.end(), rng);
  check.expect(delta_of(lambda_of(LatticeSimplex::from_vertices(rows))) == delta, name + ": vertex permutation");

  const auto lifted = delta_of(lambda_of(pyramid(s)));
  check.expect(lifted == padded(delta, delta.coeffs().size() + 1), name + ": pyramid");

  check.expect(is_gorenstein(delta) == gorenstein_by_cone(g), name + ": Gorenstein iff palindromic");
}

// An element of height k+1 and order m has every nonzero coordinate 1/m.
bool height_one_shape(const LambdaGroup& g, std::int64_t k) {
  const std::int64_t den = g.denominator();
  for (std::size_t e = 1; e < g.order(); ++e) {
    if (g.height(e) != Rational(k + 1)) continue;
    const auto& x = g.numerators(e);
    std::int64_t gcd_all = den;
    for (auto c : x) gcd_all = std::gcd(gcd_all, c);
    for (auto c : x)
      if (c != 0 && c != gcd_all) return false;
  }
  return true;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(Suite suite) {
  std::vector<CriterionResult> out;
  SearchCache cache;

  out.push_back(timed(1, "classification at v = p^2 (v=4, k=0,1)", 10, [&](Checker& check) {
    const std::int64_t p = 2;
    for (std::int64_t k = 0; k <= 1; ++k)
      classify_against_expected(check, cache, p * p, k,
                                {p * p * (k + 1) - 1, (p * p + p - 1) * (k + 1) - 1, p * (p + 1) * (k + 1) - 1});
  }));

  out.push_back(timed(2, suite == Suite::All ? "classification at v = pq (v=6) and v=9"
                                             : "classification at v = pq (v=6; v=9 skipped in fast suite)",
                      suite == Suite::All ? 600 : 60, [&](Checker& check) {
                        const auto t0 = Clock::now();
                        classify_against_expected(check, cache, 6, 0, {5, 6, 7, 7, 8});
                        const double six = std::chrono::duration<double>(Clock::now() - t0).count();
                        check.expect(six < 60, "v=6 time limit 60 s");
                        if (suite == Suite::All) classify_against_expected(check, cache, 9, 0, {8, 10, 11});
                      }));

  out.push_back(timed(3, "vertex form and generator form agree", 600, [&](Checker& check) {
    for (const auto& f : vertex_form_families(5, 1)) {
      const std::string name = describe(f);
      check.expect(canonical_form(lambda_of(construct_simplex(f))) == canonical_form(construct_group(f)), name);
    }
  }));

  out.push_back(timed(4, "lattice point counts reproduce delta", 600, [&](Checker& check) {
    std::size_t catalog = 0;
    for (const auto& f : vertex_form_families(7, 1)) {
      if (family_volume(f) > 8 || family_dimension(f) > 6) continue;
      ++catalog;
      check.expect(ehrhart_check(construct_simplex(f)), describe(f));
    }
    check.expect(catalog > 0, "no catalog simplices");
    std::mt19937_64 rng(20240531);
    for (int i = 0; i < 50; ++i) {
      const auto s = random_simplex(rng, 4, 6);
      check.expect(ehrhart_check(s), "random simplex " + std::to_string(i));
    }
  }));

  out.push_back(timed(5, "dimension bounds and the minimal class", 600, [&](Checker& check) {
    std::vector<std::pair<std::int64_t, std::int64_t>> runs{{4, 0}, {4, 1}, {6, 0}};
    if (suite == Suite::All) runs.emplace_back(9, 0);
    for (auto [v, k] : runs) {
      try {
        const auto r = verify_bounds(cache.get(v, k), v, k);
        check.expect(r.min_dim == v * (k + 1) - 1, label(v, k) + ": minimum attained");
      } catch (const Error& e) {
        check.expect(false, label(v, k) + ": " + e.what());
      }
    }
  }));

  out.push_back(timed(6, "chain construction is exact", 30, [&](Checker& check) {
    for (std::int64_t v = 2; v <= 12; ++v) {
      for (const auto& chain : chains_to(v)) {
        if (chain.size() > 3) continue;
        for (std::int64_t k = 0; k <= 1; ++k) {
          const auto mult = chain_multiplicities(chain, k);
          auto build = [&](const std::vector<std::int64_t>& s) {
            std::vector<CoordinateBlock> blocks;
            for (std::size_t i = 0; i < chain.size(); ++i) blocks.push_back({Rational(1, chain[i]), s[i]});
            const auto x = ResidueVector::from_blocks(blocks);
            return LambdaGroup::from_generators(x.size(), std::span(&x, 1), Strictness::Lenient);
          };
          auto hits_target = [&](const LambdaGroup& g) {
            if (!g.has_integral_heights() || !pyramid_coordinates(g).empty()) return false;
            const std::int64_t d = static_cast<std::int64_t>(g.ambient()) - 1;
            if (d < (v - 1) * (k + 1)) return false;
            return delta_of(g) == target(v, k, d);
          };
          std::string name = "chain";
          for (auto c : chain) name += " " + std::to_string(c);
          name += " k=" + std::to_string(k);
          check.expect(hits_target(build(mult)), name);
          for (std::size_t i = 0; i < mult.size(); ++i) {
            for (std::int64_t shift : std::set<std::int64_t>{-(k + 1), -1, 1, k + 1}) {
              auto s = mult;
              s[i] += shift;
              if (s[i] < 1) continue;
              check.expect(!hits_target(build(s)), name + " s" + std::to_string(i + 1) + (shift > 0 ? "+" : "") +
                                                        std::to_string(shift));
            }
          }
        }
      }
    }
  }));

  out.push_back(timed(7, "construction counts", 5, [&](Checker& check) {
    for (int l = 1; l <= 10; ++l) check.expect(count_M(std::int64_t{1} << l) == BigInt(1) << (l - 1), "2^" + std::to_string(l));
    for (int l = 1; l <= 6; ++l) {
      std::int64_t power = 1;
      for (int i = 0; i < l; ++i) power *= 3;
      check.expect(count_M(power) == BigInt(1) << (l - 1), "3^" + std::to_string(l));
    }
    const std::int64_t squarefree[] = {2, 6, 30, 210};
    const int expected[] = {1, 3, 13, 75};
    for (int t = 0; t < 4; ++t) {
      check.expect(count_M(squarefree[t]) == expected[t], "squarefree t=" + std::to_string(t + 1));
      check.expect(ordered_bell(t + 1) == expected[t], "ordered Bell t=" + std::to_string(t + 1));
    }
    std::map<std::int64_t, BigInt> m{{1, 1}};
    for (std::int64_t v = 2; v <= 1000; ++v) {
      BigInt sum = 0;
      for (auto n : divisors(v))
        if (n < v) sum += m.at(n);
      m[v] = count_M(v);
      check.expect(m[v] == sum, "recursion at " + std::to_string(v));
      if (v <= 200) check.expect(BigInt(chains_to(v).size()) == m[v], "chain count at " + std::to_string(v));
    }
    for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{12, 18}, {8, 27}, {36, 100}})
      check.expect(count_M(a) == count_M(b), std::to_string(a) + " vs " + std::to_string(b));
  }));

  out.push_back(timed(8, "structural properties", 30, [&](Checker& check) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) property_checks(check, random_simplex(rng, 4, 12), rng, "random " + std::to_string(i));
    for (const auto& f : vertex_form_families(5, 1)) property_checks(check, construct_simplex(f), rng, describe(f));

    std::vector<std::pair<std::int64_t, std::int64_t>> runs{{4, 0}, {4, 1}, {6, 0}};
    if (suite == Suite::All) runs.emplace_back(9, 0);
    for (auto [v, k] : runs) {
      for (const auto& c : cache.get(v, k)) {
        const std::string name = label(v, k) + " " + c.key;
        check.expect(pyramid_coordinates(c.group).empty(), name + ": not a pyramid");
        check.expect(is_gorenstein(c.delta) && gorenstein_by_cone(c.group), name + ": Gorenstein");
        check.expect(height_one_shape(c.group, k), name + ": elements of height k+1");
      }
    }
  }));

  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title << "  (" << std::fixed
    << std::setprecision(2) << r.seconds << " s)  " << r.detail;
  return s.str();
}

bool report(const std::vector<CriterionResult>& results, std::ostream& out) {
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << format_result(r) << "\n";
    passed += r.passed ? 1 : 0;
  }
  out << passed << "/" << results.size() << " criteria passed\n";
  return passed == results.size();
}

}  // namespace gorenstein
