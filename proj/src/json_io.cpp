#include "ffkakeya/json_io.hpp"

#include <fstream>
#include <sstream>

#include "ffkakeya/error.hpp"

namespace ffkakeya {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  fail(ErrorCode::ParseError, (path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path, std::string("missing key \"") + key + "\"");
  return *it;
}

std::uint64_t as_uint(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    schema_error(path, "expected a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

std::uint32_t as_u32(const Json& j, const std::string& path) {
  const auto v = as_uint(j, path);
  if (v > UINT32_MAX) schema_error(path, "integer out of range");
  return static_cast<std::uint32_t>(v);
}

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

}  // namespace

Json to_json(const Field& field) {
  Json j;
  j["p"] = field.p();
  j["m"] = field.m();
  if (field.m() > 1) j["modulus"] = field.modulus();
  return j;
}

Field field_from_json(const Json& j, const std::string& path) {
  const auto p = as_u32(member(j, "p", path), at(path, "p"));
  std::uint32_t m = 1;
  if (j.contains("m")) m = as_u32(j["m"], at(path, "m"));
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus") && !j["modulus"].is_null()) {
    const Json& mj = j["modulus"];
    if (!mj.is_array()) schema_error(at(path, "modulus"), "expected an array");
    std::vector<std::uint32_t> coeffs;
    for (std::size_t i = 0; i < mj.size(); ++i) coeffs.push_back(as_u32(mj[i], at(at(path, "modulus"), i)));
    modulus = std::move(coeffs);
  }
  return Field::make(p, m, std::move(modulus));
}

Json to_json(const Field& field, Elem e) {
  if (field.is_prime_field()) return Json(e.code);
  return Json(field.repr(e));
}

Elem elem_from_json(const Field& field, const Json& j, const std::string& path) {
  if (field.is_prime_field()) {
    if (j.is_array()) {
      if (j.size() != 1) schema_error(path, "prime-field element array must have length 1");
      return elem_from_json(field, j[0], at(path, 0));
    }
    const auto v = as_uint(j, path);
    if (v >= field.p()) schema_error(path, "element out of range [0, p)");
    return Elem{static_cast<std::uint32_t>(v)};
  }
  if (!j.is_array() || j.size() != field.m()) {
    schema_error(path, "expected an array of " + std::to_string(field.m()) + " coefficients");
  }
  std::vector<std::uint32_t> coeffs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto c = as_u32(j[i], at(path, i));
    if (c >= field.p()) schema_error(at(path, i), "coefficient out of range [0, p)");
    coeffs.push_back(c);
  }
  return field.from_repr(coeffs);
}

Json to_json(const Field& field, const Point& p) {
  Json j = Json::array();
  for (auto x : p) j.push_back(to_json(field, x));
  return j;
}

Point point_from_json(const Field& field, const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of coordinates");
  Point p;
  for (std::size_t i = 0; i < j.size(); ++i) p.push_back(elem_from_json(field, j[i], at(path, i)));
  return p;
}

Json to_json(const MultiIndex& alpha) {
  Json j = Json::array();
  for (auto e : alpha.exps()) j.push_back(e);
  return j;
}

MultiIndex multi_index_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an exponent array");
  std::vector<std::uint32_t> exps;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto e = as_u32(j[i], at(path, i));
    if (e >= kMaxExponent) schema_error(at(path, i), "exponent exceeds 2^20");
    exps.push_back(e);
  }
  return MultiIndex(std::move(exps));
}

Json to_json(const SparsePoly& poly) {
  Json j;
  j["field"] = to_json(poly.field());
  j["arity"] = poly.arity();
  Json terms = Json::array();
  for (const auto& [e, c] : poly.terms()) {
    Json t;
    t["exp"] = to_json(e);
    t["coeff"] = to_json(poly.field(), c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

SparsePoly poly_from_json(const Json& j, const Field& field, const std::string& path) {
  if (j.contains("field")) {
    const Field embedded = field_from_json(j["field"], at(path, "field"));
    if (!(embedded == field)) schema_error(at(path, "field"), "polynomial field differs from context");
  }
  const auto arity = as_uint(member(j, "arity", path), at(path, "arity"));
  const Json& terms = member(j, "terms", path);
  if (!terms.is_array()) schema_error(at(path, "terms"), "expected an array");
  SparsePoly poly(field, arity);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = at(at(path, "terms"), i);
    const MultiIndex e = multi_index_from_json(member(terms[i], "exp", tp), at(tp, "exp"));
    if (e.arity() != arity) schema_error(at(tp, "exp"), "exponent length differs from arity");
    poly.add_term(e, elem_from_json(field, member(terms[i], "coeff", tp), at(tp, "coeff")));
  }
  return poly;
}

SparsePoly poly_from_json(const Json& j, const std::string& path) {
  const Field field = field_from_json(member(j, "field", path), at(path, "field"));
  return poly_from_json(j, field, path);
}

Json to_json(const PointSet& set) {
  Json j;
  j["field"] = to_json(set.field());
  j["n"] = set.dimension();
  Json pts = Json::array();
  for (const auto& p : set.points()) pts.push_back(to_json(set.field(), p));
  j["points"] = std::move(pts);
  return j;
}

PointSet set_from_json(const Json& j, const std::string& path) {
  const Field field = field_from_json(member(j, "field", path), at(path, "field"));
  const auto n = as_uint(member(j, "n", path), at(path, "n"));
  const Json& pts = member(j, "points", path);
  if (!pts.is_array()) schema_error(at(path, "points"), "expected an array");
  std::vector<Point> points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Point p = point_from_json(field, pts[i], at(at(path, "points"), i));
    if (p.size() != n) schema_error(at(at(path, "points"), i), "point has wrong dimension");
    points.push_back(std::move(p));
  }
  return PointSet(field, n, std::move(points));
}

Json to_json(const BrkInstance& inst) {
  const Field& f = inst.field();
  Json j;
  j["field"] = to_json(f);
  j["n"] = inst.dimension();
  j["ell"] = inst.ell();
  j["g"] = to_json(inst.g());
  Json per = Json::array();
  for (auto rho : f.elements()) {
    const auto& ch = inst.choice(rho);
    Json r;
    r["rho"] = to_json(f, rho);
    r["a"] = to_json(f, ch.a);
    r["lower"] = to_json(ch.lower);
    per.push_back(std::move(r));
  }
  j["per_rho"] = std::move(per);
  return j;
}

BrkInstance instance_from_json(const Json& j, const std::string& path) {
  const Field f = field_from_json(member(j, "field", path), at(path, "field"));
  const auto n = as_uint(member(j, "n", path), at(path, "n"));
  const auto ell = as_u32(member(j, "ell", path), at(path, "ell"));
  if (n < 2) schema_error(at(path, "n"), "dimension must be >= 2");
  SparsePoly g = poly_from_json(member(j, "g", path), f, at(path, "g"));

  std::vector<std::optional<RhoChoice>> slots(f.q());
  if (j.contains("per_rho")) {
    const Json& per = j["per_rho"];
    const std::string pp = at(path, "per_rho");
    if (!per.is_array()) schema_error(pp, "expected an array");
    for (std::size_t i = 0; i < per.size(); ++i) {
      const std::string ep = at(pp, i);
      const Elem rho = elem_from_json(f, member(per[i], "rho", ep), at(ep, "rho"));
      if (slots[rho.code]) schema_error(at(ep, "rho"), "duplicate rho");
      Point a = per[i].contains("a") ? point_from_json(f, per[i]["a"], at(ep, "a"))
                                     : Point(n, f.zero());
      if (a.size() != n) schema_error(at(ep, "a"), "translation has wrong dimension");
      SparsePoly lower = per[i].contains("lower")
                             ? poly_from_json(per[i]["lower"], f, at(ep, "lower"))
                             : SparsePoly(f, n - 1);
      slots[rho.code] = RhoChoice{std::move(a), std::move(lower)};
    }
  }
  // Missing rho entries default to a = 0 with no lower-order part.
  std::vector<RhoChoice> per_rho;
  for (auto& s : slots) {
    per_rho.push_back(s ? std::move(*s) : RhoChoice{Point(n, f.zero()), SparsePoly(f, n - 1)});
  }
  return BrkInstance(f, n, ell, std::move(g), std::move(per_rho));
}

Json to_json(const LinearSystem& sys) {
  const Field& f = sys.matrix.field();
  Json j;
  j["field"] = to_json(f);
  Json rows = Json::array();
  for (const auto& [pi, beta] : sys.row_labels) {
    Json r;
    r["point"] = pi;
    r["beta"] = to_json(beta);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  Json cols = Json::array();
  for (const auto& c : sys.columns) cols.push_back(to_json(c));
  j["cols"] = std::move(cols);
  Json entries = Json::array();
  for (std::size_t r = 0; r < sys.matrix.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < sys.matrix.cols(); ++c) row.push_back(to_json(f, sys.matrix.at(r, c)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const SearchResult& result) {
  Json j;
  j["min_size"] = result.min_size;
  j["exact"] = result.exact;
  j["configurations"] = result.configurations;
  Json b;
  b["fraction"] = result.bound.fraction();
  b["ceiling"] = result.bound.ceiling;
  j["bound"] = std::move(b);
  j["witness"] = to_json(result.witness);
  return j;
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ParseError, source + " at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

}  // namespace ffkakeya
