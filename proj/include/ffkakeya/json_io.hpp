#pragma once

// JSON encodings of fields, elements, polynomials, point sets, instances and
// debug dumps. Field descriptor: {"p", "m", "modulus"?}. Elements of prime
// fields are integers; extension-field elements are their coefficient arrays
// (constant term first). Polynomials list terms in ascending lex order of
// exponents and sets list points in ascending lex order, so equal values
// always serialize to identical bytes.

#include <string>

#include <json.hpp>

#include "ffkakeya/brkset.hpp"
#include "ffkakeya/field.hpp"
#include "ffkakeya/multi_index.hpp"
#include "ffkakeya/sparse_poly.hpp"
#include "ffkakeya/vanish.hpp"

namespace ffkakeya {

using Json = nlohmann::ordered_json;

Json to_json(const Field& field);
Field field_from_json(const Json& j, const std::string& path = "");

Json to_json(const Field& field, Elem e);
Elem elem_from_json(const Field& field, const Json& j, const std::string& path = "");

Json to_json(const Field& field, const Point& p);
Point point_from_json(const Field& field, const Json& j, const std::string& path = "");

Json to_json(const MultiIndex& alpha);
MultiIndex multi_index_from_json(const Json& j, const std::string& path = "");

Json to_json(const SparsePoly& poly);
SparsePoly poly_from_json(const Json& j, const std::string& path = "");
/// As above, additionally requiring the given field (the embedded descriptor
/// may be omitted).
SparsePoly poly_from_json(const Json& j, const Field& field, const std::string& path = "");

Json to_json(const PointSet& set);
PointSet set_from_json(const Json& j, const std::string& path = "");

Json to_json(const BrkInstance& inst);
BrkInstance instance_from_json(const Json& j, const std::string& path = "");

Json to_json(const LinearSystem& sys);

Json to_json(const SearchResult& result);

/// Parses text, reporting malformed input as ParseError with the source name
/// and byte offset.
Json parse_json(const std::string& text, const std::string& source);
Json load_json_file(const std::string& path);

}  // namespace ffkakeya
