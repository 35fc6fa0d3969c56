#include "gorenstein/catalog.hpp"

#include <array>

#include "gorenstein/counting.hpp"
#include "gorenstein/numtheory.hpp"

namespace gorenstein {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 12> kNames{{
    {Family::Prime, "prime"},
    {Family::Divisor, "divisor"},
    {Family::Join, "join"},
    {Family::P2Case1, "p2-case1"},
    {Family::P2Case2, "p2-case2"},
    {Family::P2Case3, "p2-case3"},
    {Family::PqCase1, "pq-case1"},
    {Family::PqCase2, "pq-case2"},
    {Family::PqCase3, "pq-case3"},
    {Family::PqCase4, "pq-case4"},
    {Family::PqCase5, "pq-case5"},
    {Family::Chain, "chain"},
}};

bool is_p2(Family f) { return f == Family::P2Case1 || f == Family::P2Case2 || f == Family::P2Case3; }

bool is_pq(Family f) {
  return f == Family::PqCase1 || f == Family::PqCase2 || f == Family::PqCase3 ||
         f == Family::PqCase4 || f == Family::PqCase5;
}

[[noreturn]] void invalid(const FamilySpec& f, const std::string& why) {
  throw Error(ErrorKind::InvalidParams, std::string(family_name(f.family)) + ": " + why);
}

std::vector<std::int64_t> runs(std::initializer_list<std::pair<std::int64_t, std::int64_t>> blocks) {
  std::vector<std::int64_t> out;
  for (const auto& [value, count] : blocks) out.insert(out.end(), static_cast<std::size_t>(count), value);
  return out;
}

ResidueVector pad(const ResidueVector& v, std::size_t before, std::size_t after) {
  std::vector<Rational> coords(before, Rational(0));
  coords.insert(coords.end(), v.coords().begin(), v.coords().end());
  coords.resize(coords.size() + after, Rational(0));
  return ResidueVector(std::move(coords));
}

// Generator form of a validated family.
std::vector<ResidueVector> generators_of(const FamilySpec& f) {
  const std::int64_t k1 = family_k(f) + 1;
  auto block = [](std::int64_t num, std::int64_t den, std::int64_t count) {
    return CoordinateBlock{Rational(num, den), count};
  };
  switch (f.family) {
    case Family::Prime: {
      const auto p = f.param("p");
      return {ResidueVector::from_blocks({block(1, p, p * k1)})};
    }
    case Family::Divisor: {
      const auto v = f.param("v"), u = f.param("u");
      return {ResidueVector::from_blocks({block(u, v, (v - 1) * k1), block(1, v, u * k1)})};
    }
    case Family::P2Case1: {
      const auto p = f.param("p");
      return {ResidueVector::from_blocks({block(1, p * p, p * p * k1)})};
    }
    case Family::P2Case2: {
      const auto p = f.param("p");
      return {ResidueVector::from_blocks({block(1, p, (p * p - 1) * k1), block(1, p * p, p * k1)})};
    }
    case Family::P2Case3: {
      const auto p = f.param("p");
      return {ResidueVector::from_blocks({block(1, p, p * k1), block(0, 1, p * p * k1)}),
              ResidueVector::from_blocks({block(0, 1, p * k1), block(1, p, p * p * k1)})};
    }
    case Family::PqCase1: {
      const auto p = f.param("p"), q = f.param("q");
      return {ResidueVector::from_blocks({block(1, p * q, p * q * k1)})};
    }
    case Family::PqCase2: {
      const auto p = f.param("p"), q = f.param("q");
      return {ResidueVector::from_blocks({block(1, p, p * k1), block(1, q, p * q * k1)})};
    }
    case Family::PqCase3: {
      const auto p = f.param("p"), q = f.param("q");
      return {ResidueVector::from_blocks({block(1, q, q * k1), block(1, p, p * q * k1)})};
    }
    case Family::PqCase4: {
      const auto p = f.param("p"), q = f.param("q");
      return {ResidueVector::from_blocks({block(1, q, (p * q - 1) * k1), block(1, p * q, p * k1)})};
    }
    case Family::PqCase5: {
      const auto p = f.param("p"), q = f.param("q");
      return {ResidueVector::from_blocks({block(1, p, (p * q - 1) * k1), block(1, p * q, q * k1)})};
    }
    case Family::Chain:
      return {chain_generator(f.chain, family_k(f))};
    case Family::Join: {
      const auto a = generators_of(f.parts[0]);
      const auto b = generators_of(f.parts[1]);
      const std::size_t na = static_cast<std::size_t>(family_dimension(f.parts[0]) + 1);
      const std::size_t nb = static_cast<std::size_t>(family_dimension(f.parts[1]) + 1);
      std::vector<ResidueVector> out;
      for (const auto& g : a) out.push_back(pad(g, 0, nb));
      for (const auto& g : b) out.push_back(pad(g, na, 0));
      return out;
    }
  }
  return {};
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [family, name] : kNames)
    if (family == f) return name;
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& [family, n] : kNames)
    if (n == name) return family;
  return std::nullopt;
}

FamilySpec FamilySpec::prime(std::int64_t p, std::int64_t k) {
  return {Family::Prime, {{"p", p}, {"k", k}}, {}, {}};
}

FamilySpec FamilySpec::divisor(std::int64_t v, std::int64_t u, std::int64_t k) {
  return {Family::Divisor, {{"v", v}, {"u", u}, {"k", k}}, {}, {}};
}

FamilySpec FamilySpec::join(FamilySpec first, FamilySpec second) {
  return {Family::Join, {}, {}, {std::move(first), std::move(second)}};
}

FamilySpec FamilySpec::p2(int which, std::int64_t p, std::int64_t k) {
  static constexpr Family kCases[] = {Family::P2Case1, Family::P2Case2, Family::P2Case3};
  if (which < 1 || which > 3) throw Error(ErrorKind::InvalidParams, "p2 case must be 1..3");
  return {kCases[which - 1], {{"p", p}, {"k", k}}, {}, {}};
}

FamilySpec FamilySpec::pq(int which, std::int64_t p, std::int64_t q, std::int64_t k) {
  static constexpr Family kCases[] = {Family::PqCase1, Family::PqCase2, Family::PqCase3,
                                      Family::PqCase4, Family::PqCase5};
  if (which < 1 || which > 5) throw Error(ErrorKind::InvalidParams, "pq case must be 1..5");
  return {kCases[which - 1], {{"p", p}, {"q", q}, {"k", k}}, {}, {}};
}

FamilySpec FamilySpec::chain_of(std::vector<std::int64_t> chain, std::int64_t k) {
  return {Family::Chain, {{"k", k}}, std::move(chain), {}};
}

std::int64_t FamilySpec::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end())
    throw Error(ErrorKind::InvalidParams,
                std::string(family_name(family)) + ": missing parameter '" + name + "'");
  return it->second;
}

std::string describe(const FamilySpec& f) {
  if (f.family == Family::Join)
    return "join(" + describe(f.parts.at(0)) + ", " + describe(f.parts.at(1)) + ")";
  std::string out(family_name(f.family));
  if (f.family == Family::Chain) {
    out += " ";
    for (std::size_t i = 0; i < f.chain.size(); ++i) out += (i ? "," : "") + std::to_string(f.chain[i]);
  }
  for (const char* name : {"p", "q", "v", "u", "k"}) {
    auto it = f.params.find(name);
    if (it != f.params.end()) out += std::string(" ") + name + "=" + std::to_string(it->second);
  }
  return out;
}

void validate(const FamilySpec& f) {
  if (f.family != Family::Join && f.param("k") < 0) invalid(f, "k must be >= 0");
  switch (f.family) {
    case Family::Prime:
      if (!is_prime(f.param("p"))) invalid(f, "p must be prime");
      return;
    case Family::Divisor: {
      const auto v = f.param("v"), u = f.param("u");
      if (v < 2 || u < 1 || u >= v || v % u != 0) invalid(f, "u must be a proper divisor of v >= 2");
      return;
    }
    case Family::P2Case1:
    case Family::P2Case2:
    case Family::P2Case3:
      if (!is_prime(f.param("p"))) invalid(f, "p must be prime");
      return;
    case Family::PqCase1:
    case Family::PqCase2:
    case Family::PqCase3:
    case Family::PqCase4:
    case Family::PqCase5: {
      const auto p = f.param("p"), q = f.param("q");
      if (!is_prime(p) || !is_prime(q) || p == q) invalid(f, "p and q must be distinct primes");
      return;
    }
    case Family::Chain:
      chain_multiplicities(f.chain, f.param("k"));
      return;
    case Family::Join: {
      if (f.parts.size() != 2) invalid(f, "needs exactly two factors");
      validate(f.parts[0]);
      validate(f.parts[1]);
      // second factor must have step v_1 (k+1)
      const std::int64_t step = family_volume(f.parts[0]) * (family_k(f.parts[0]) + 1);
      if (family_k(f.parts[1]) + 1 != step)
        invalid(f, "second factor must have k + 1 = " + std::to_string(step));
      return;
    }
  }
}

std::int64_t family_volume(const FamilySpec& f) {
  switch (f.family) {
    case Family::Prime:
      return f.param("p");
    case Family::Divisor:
      return f.param("v");
    case Family::Join:
      return family_volume(f.parts.at(0)) * family_volume(f.parts.at(1));
    case Family::Chain:
      if (f.chain.empty()) throw Error(ErrorKind::InvalidChain, "empty chain");
      return f.chain.back();
    default:
      break;
  }
  if (is_p2(f.family)) return f.param("p") * f.param("p");
  return f.param("p") * f.param("q");
}

std::int64_t family_k(const FamilySpec& f) {
  if (f.family == Family::Join) return family_k(f.parts.at(0));
  return f.param("k");
}

std::int64_t family_dimension(const FamilySpec& f) {
  validate(f);
  return static_cast<std::int64_t>(generators_of(f).front().size()) - 1;
}

std::vector<std::int64_t> chain_multiplicities(const std::vector<std::int64_t>& chain, std::int64_t k) {
  if (chain.empty()) throw Error(ErrorKind::InvalidChain, "chain must be non-empty");
  if (k < 0) throw Error(ErrorKind::InvalidChain, "k must be >= 0");
  if (chain.front() <= 1) throw Error(ErrorKind::InvalidChain, "chain must start above 1");
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (chain[i] <= chain[i - 1] || chain[i] % chain[i - 1] != 0)
      throw Error(ErrorKind::InvalidChain, "chain must increase with each term dividing the next");
  }
  const std::size_t t = chain.size();
  const std::int64_t top = chain.back();
  auto at = [&](std::size_t i) { return i == 0 ? std::int64_t{1} : chain[i - 1]; };  // v_0 = 1
  std::vector<std::int64_t> s(t);
  for (std::size_t i = 1; i < t; ++i) s[i - 1] = (top / at(i - 1) - top / at(i + 1)) * (k + 1);
  s[t - 1] = (top / at(t - 1)) * (k + 1);
  return s;
}

ResidueVector chain_generator(const std::vector<std::int64_t>& chain, std::int64_t k) {
  const auto s = chain_multiplicities(chain, k);
  std::vector<CoordinateBlock> blocks;
  for (std::size_t i = 0; i < chain.size(); ++i) blocks.push_back({Rational(1, chain[i]), s[i]});
  return ResidueVector::from_blocks(blocks);
}

LambdaGroup construct_group(const FamilySpec& f) {
  validate(f);
  if (f.family == Family::Join) return direct_sum(construct_group(f.parts[0]), construct_group(f.parts[1]));
  const auto gens = generators_of(f);
  return LambdaGroup::from_generators(gens.front().size(), gens, Strictness::Strict);
}

bool has_vertex_form(const FamilySpec& f) { return is_p2(f.family) || is_pq(f.family); }

LatticeSimplex construct_simplex(const FamilySpec& f) {
  if (!has_vertex_form(f))
    throw Error(ErrorKind::NoVertexForm,
                std::string(family_name(f.family)) + " has no displayed vertex realization");
  validate(f);
  const std::int64_t k1 = f.param("k") + 1;
  const std::int64_t p = f.param("p");
  switch (f.family) {
    case Family::P2Case1:
      return family_A(runs({{1, p * p * k1 - 2}, {p * p, 1}}));
    case Family::P2Case2:
      return family_A(runs({{1, p * k1 - 1}, {p, (p * p - 1) * k1 - 1}, {p * p, 1}}));
    case Family::P2Case3:
      return family_BC(runs({{1, p * k1 - 1}, {p, 1}}),
                       runs({{p, p * k1}, {1, p * p * k1 - 2}, {p, 1}}));
    default:
      break;
  }
  const std::int64_t q = f.param("q");
  switch (f.family) {
    case Family::PqCase1:
      return family_A(runs({{1, p * q * k1 - 2}, {p * q, 1}}));
    case Family::PqCase2:
      return family_BC(runs({{1, p * k1 - 1}, {p, 1}}),
                       runs({{q, p * k1}, {1, p * q * k1 - 2}, {q, 1}}));
    case Family::PqCase3:
      return family_BC(runs({{1, q * k1 - 1}, {q, 1}}),
                       runs({{p, q * k1}, {1, p * q * k1 - 2}, {p, 1}}));
    case Family::PqCase4:
      return family_A(runs({{1, p * k1 - 1}, {p, (p * q - 1) * k1 - 1}, {p * q, 1}}));
    case Family::PqCase5:
      return family_A(runs({{1, q * k1 - 1}, {q, (p * q - 1) * k1 - 1}, {p * q, 1}}));
    default:
      break;
  }
  throw Error(ErrorKind::NoVertexForm, "unreachable");
}

std::vector<FamilySpec> expected_families(std::int64_t v, std::int64_t k) {
  if (k < 0) throw Error(ErrorKind::InvalidParams, "k must be >= 0");
  const auto f = v >= 2 ? factorize(v) : decltype(factorize(v)){};
  if (f.size() == 1 && f[0].second == 2) {
    const auto p = f[0].first;
    return {FamilySpec::p2(1, p, k), FamilySpec::p2(2, p, k), FamilySpec::p2(3, p, k)};
  }
  if (f.size() == 2 && f[0].second == 1 && f[1].second == 1) {
    const auto p = f[0].first, q = f[1].first;
    std::vector<FamilySpec> out;
    for (int which = 1; which <= 5; ++which) out.push_back(FamilySpec::pq(which, p, q, k));
    return out;
  }
  throw Error(ErrorKind::UnsupportedVolume,
              "expected classes are only known for v = p^2 or v = pq, got " + std::to_string(v));
}

std::vector<LambdaGroup> expected_classes(std::int64_t v, std::int64_t k) {
  std::vector<LambdaGroup> out;
  for (const auto& f : expected_families(v, k)) out.push_back(construct_group(f));
  return out;
}

std::vector<FamilySpec> reference_families(std::int64_t v, std::int64_t k) {
  std::vector<FamilySpec> out;
  if (is_prime(v)) out.push_back(FamilySpec::prime(v, k));
  try {
    out = expected_families(v, k);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedVolume) throw;
  }
  for (auto& chain : chains_to(v)) out.push_back(FamilySpec::chain_of(std::move(chain), k));
  return out;
}

}  // namespace gorenstein
