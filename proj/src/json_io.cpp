#include "gorenstein/json_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace gorenstein {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

std::int64_t parse_int(std::string_view text) {
  std::int64_t x = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    parse_error("not an integer: '" + std::string(text) + "'");
  return x;
}

std::int64_t get_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_error(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) parse_error("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) parse_error(std::string("missing field \"") + key + "\"");
  return *it;
}

Json residue_json(const ResidueVector& v) {
  Json row = Json::array();
  for (const auto& x : v.coords()) row.push_back(fraction_string(x));
  return row;
}

std::set<std::string> allowed_params(Family f) {
  switch (f) {
    case Family::Prime:
    case Family::P2Case1:
    case Family::P2Case2:
    case Family::P2Case3:
      return {"p", "k"};
    case Family::Divisor:
      return {"v", "u", "k"};
    case Family::PqCase1:
    case Family::PqCase2:
    case Family::PqCase3:
    case Family::PqCase4:
    case Family::PqCase5:
      return {"p", "q", "k"};
    case Family::Chain:
      return {"chain", "k"};
    case Family::Join:
      return {"first", "second"};
  }
  return {};
}

}  // namespace

std::string fraction_string(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

Rational parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const std::int64_t num = parse_int(text.substr(0, slash));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) parse_error("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Json to_json(const LatticeSimplex& s) {
  Json rows = Json::array();
  const auto& m = s.vertices();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const BigInt& x = m(i, j);
      if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        row.push_back(x.str());
      else
        row.push_back(x.convert_to<std::int64_t>());
    }
    rows.push_back(std::move(row));
  }
  return Json{{"dim", s.dim()}, {"vertices", std::move(rows)}};
}

LatticeSimplex simplex_from_json(const Json& j) {
  const std::int64_t dim = get_int(field(j, "dim"), "dim");
  const Json& rows = field(j, "vertices");
  if (!rows.is_array()) parse_error("\"vertices\" must be an array");
  std::vector<std::vector<std::int64_t>> vertices;
  for (const auto& row : rows) {
    if (!row.is_array()) parse_error("each vertex must be an array");
    std::vector<std::int64_t> v;
    for (const auto& x : row) v.push_back(get_int(x, "vertex coordinate"));
    if (static_cast<std::int64_t>(v.size()) != dim)
      parse_error("vertex has " + std::to_string(v.size()) + " coordinates, dim is " + std::to_string(dim));
    vertices.push_back(std::move(v));
  }
  if (static_cast<std::int64_t>(vertices.size()) != dim + 1)
    parse_error("expected " + std::to_string(dim + 1) + " vertices, got " + std::to_string(vertices.size()));
  return LatticeSimplex::from_vertices(vertices);
}

Json to_json(const LambdaGroup& g) {
  Json gens = Json::array();
  for (const auto& x : g.generators()) gens.push_back(residue_json(x));
  return Json{{"ambient", g.ambient()}, {"generators", std::move(gens)}};
}

LambdaGroup group_from_json(const Json& j) {
  const std::int64_t ambient = get_int(field(j, "ambient"), "ambient");
  if (ambient < 1) parse_error("ambient must be positive");
  const Json& rows = field(j, "generators");
  if (!rows.is_array()) parse_error("\"generators\" must be an array");
  std::vector<ResidueVector> gens;
  for (const auto& row : rows) {
    if (!row.is_array()) parse_error("each generator must be an array");
    std::vector<Rational> coords;
    for (const auto& x : row) {
      if (x.is_string())
        coords.push_back(parse_fraction(x.get<std::string>()));
      else
        coords.emplace_back(get_int(x, "generator entry"));
    }
    gens.emplace_back(std::move(coords));
  }
  return LambdaGroup::from_generators(static_cast<std::size_t>(ambient), gens, Strictness::Lenient);
}

Json to_json(const FamilySpec& f) {
  Json params = Json::object();
  if (f.family == Family::Join) {
    params["first"] = to_json(f.parts.at(0));
    params["second"] = to_json(f.parts.at(1));
  } else {
    for (const auto& [name, value] : f.params) params[name] = value;
    if (f.family == Family::Chain) params["chain"] = f.chain;
  }
  return Json{{"family", std::string(family_name(f.family))}, {"params", std::move(params)}};
}

FamilySpec family_from_json(const Json& j) {
  const Json& name = field(j, "family");
  if (!name.is_string()) parse_error("\"family\" must be a string");
  const auto family = family_from_name(name.get<std::string>());
  if (!family) parse_error("unknown family \"" + name.get<std::string>() + "\"");
  const Json& params = field(j, "params");
  if (!params.is_object()) parse_error("\"params\" must be an object");

  const auto allowed = allowed_params(*family);
  for (const auto& [key, _] : params.items())
    if (!allowed.contains(key)) parse_error("unexpected parameter \"" + key + "\" for " + name.get<std::string>());
  for (const auto& key : allowed)
    if (!params.contains(key)) parse_error("missing parameter \"" + key + "\" for " + name.get<std::string>());

  FamilySpec f;
  f.family = *family;
  if (*family == Family::Join) {
    f.parts.push_back(family_from_json(params["first"]));
    f.parts.push_back(family_from_json(params["second"]));
    return f;
  }
  for (const auto& [key, value] : params.items()) {
    if (key == "chain") {
      if (!value.is_array()) parse_error("\"chain\" must be an array");
      for (const auto& x : value) f.chain.push_back(get_int(x, "chain entry"));
    } else {
      f.params[key] = get_int(value, key.c_str());
    }
  }
  return f;
}

Json to_json(const DeltaPolynomial& p) { return Json(p.coeffs()); }

Json to_json(const ClassifiedGroup& c) {
  Json out{{"dim", c.dim}, {"generators", to_json(c.group)["generators"]}, {"delta", to_json(c.delta)}};
  out["matched_family"] = c.matched_family ? Json(*c.matched_family) : Json(nullptr);
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

std::string dump_line(const Json& j) { return j.dump() + "\n"; }

}  // namespace gorenstein
