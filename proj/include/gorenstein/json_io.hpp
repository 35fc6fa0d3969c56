#ifndef GORENSTEIN_JSON_IO_HPP
#define GORENSTEIN_JSON_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gorenstein/catalog.hpp"
#include "gorenstein/classifier.hpp"
#include "gorenstein/delta.hpp"
#include "gorenstein/lambda.hpp"
#include "gorenstein/simplex.hpp"

namespace gorenstein {

// nlohmann::json keeps object keys sorted, so dump() is deterministic.
using Json = nlohmann::json;

/// "a/b" in lowest terms, "0" for zero.
std::string fraction_string(const Rational& x);
/// Accepts "a/b" or an integer. Throws ParseError.
Rational parse_fraction(std::string_view text);

/// {"dim": d, "vertices": [[...], ...]}
Json to_json(const LatticeSimplex& s);
LatticeSimplex simplex_from_json(const Json& j);

/// {"ambient": n, "generators": [["a/b", ...], ...]}
Json to_json(const LambdaGroup& g);
/// Lenient closure; callers decide about heights.
LambdaGroup group_from_json(const Json& j);

/// {"family": "pq-case2", "params": {"p": 2, "q": 3, "k": 0}}. Chains
/// carry "chain": [v_1, ..., v_t]; joins carry "first" and "second".
Json to_json(const FamilySpec& f);
FamilySpec family_from_json(const Json& j);

/// {"dim": d, "generators": [...], "delta": [...], "matched_family": name | null}
Json to_json(const ClassifiedGroup& c);

Json to_json(const DeltaPolynomial& p);

/// Parses text; throws ParseError with the parser's message.
Json parse_json(std::string_view text);
/// Reads and parses a file. Throws ParseError.
Json read_json_file(const std::string& path);

/// One-line dump followed by a newline.
std::string dump_line(const Json& j);

}  // namespace gorenstein

#endif  // GORENSTEIN_JSON_IO_HPP
