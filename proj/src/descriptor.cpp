#include "cokit/descriptor.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace cokit {

namespace {

const Json& require_key(const Json& j, const char* key, const std::string& ctx) {
  if (!j.is_object()) throw Error(Err::ParseError, ctx + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw Error(Err::ParseError, ctx + " is missing \"" + key + "\"");
  return *it;
}

Rational rational_at(const Json& j, const std::string& ctx) {
  if (!j.is_string()) throw Error(Err::ParseError, ctx + " must be a rational string \"p/q\"");
  return parse_rational(j.get<std::string>());
}

std::vector<Rational> rational_vector(const Json& j, const std::string& ctx) {
  if (!j.is_array() || j.empty())
    throw Error(Err::ParseError, ctx + " must be a nonempty array of rational strings");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const Json& entry : j) out.push_back(rational_at(entry, ctx + " entry"));
  return out;
}

Json string_array(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const Rational& q : v) a.push_back(rational_str(q));
  return a;
}

}  // namespace

Json field_to_json(const FieldPtr& f) {
  Json j;
  j["minpoly"] = string_array(f->minpoly().c);
  if (f->is_real()) {
    const QInterval& iv = f->real_interval();
    j["root"] = Json{{"kind", "real"}, {"lo", rational_str(iv.lo)}, {"hi", rational_str(iv.hi)}};
    if (!f->radicals().empty()) {
      Json rads = Json::array();
      for (const auto& [coeffs, square] : f->radicals()) rads.push_back(string_array(coeffs));
      j["radicals"] = rads;
    }
  } else {
    const QBox& box = f->complex_box();
    j["root"] = Json{{"kind", "imaginary"},
                     {"re_lo", rational_str(box.re.lo)},
                     {"re_hi", rational_str(box.re.hi)},
                     {"im_lo", rational_str(box.im.lo)},
                     {"im_hi", rational_str(box.im.hi)}};
    j["conj"] = string_array(f->conj_coeffs());
  }
  return j;
}

FieldPtr field_from_json(const Json& j) {
  std::vector<Rational> coeffs = rational_vector(require_key(j, "minpoly", "field descriptor"),
                                                 "field descriptor \"minpoly\"");
  if (coeffs.size() < 2)
    throw Error(Err::ParseError, "minpoly must have degree at least 1");
  if (coeffs.back() != 1) throw Error(Err::ParseError, "minpoly not monic");
  RatPoly minpoly(std::move(coeffs));

  const Json& root = require_key(j, "root", "field descriptor");
  const Json& kind = require_key(root, "kind", "field descriptor \"root\"");
  if (!kind.is_string())
    throw Error(Err::ParseError, "field root \"kind\" must be \"real\" or \"imaginary\"");

  if (kind.get<std::string>() == "real") {
    QInterval iv(rational_at(require_key(root, "lo", "real root"), "real root \"lo\""),
                 rational_at(require_key(root, "hi", "real root"), "real root \"hi\""));
    std::vector<std::vector<Rational>> radicals;
    if (j.contains("radicals")) {
      const Json& rads = j.at("radicals");
      if (!rads.is_array())
        throw Error(Err::ParseError, "field \"radicals\" must be an array of coefficient arrays");
      for (const Json& entry : rads)
        radicals.push_back(rational_vector(entry, "field \"radicals\" entry"));
    }
    return AlgebraicField::make_real(std::move(minpoly), iv, std::move(radicals));
  }

  if (kind.get<std::string>() == "imaginary") {
    if (j.contains("radicals"))
      throw Error(Err::ParseError, "field \"radicals\" applies only to real fields");
    QBox box{QInterval(rational_at(require_key(root, "re_lo", "imaginary root"), "\"re_lo\""),
                       rational_at(require_key(root, "re_hi", "imaginary root"), "\"re_hi\"")),
             QInterval(rational_at(require_key(root, "im_lo", "imaginary root"), "\"im_lo\""),
                       rational_at(require_key(root, "im_hi", "imaginary root"), "\"im_hi\""))};
    std::optional<std::vector<Rational>> conj_coeffs;
    if (j.contains("conj"))
      conj_coeffs = rational_vector(j.at("conj"), "field \"conj\"");
    return AlgebraicField::make_imaginary(std::move(minpoly), box, std::move(conj_coeffs));
  }

  throw Error(Err::ParseError, "field root \"kind\" must be \"real\" or \"imaginary\"");
}

Json element_to_json(const FieldElement& e) { return string_array(e.coeffs()); }

FieldElement element_from_json(const Json& j, const FieldPtr& f) {
  std::vector<Rational> coeffs = rational_vector(j, "element descriptor");
  if (static_cast<int>(coeffs.size()) > f->degree())
    throw Error(Err::ParseError, "element has " + std::to_string(coeffs.size()) +
                                     " coefficients but the field has degree " +
                                     std::to_string(f->degree()));
  coeffs.resize(f->degree(), Rational(0));
  return make_element(f, std::move(coeffs));
}

Json module_to_json(const FreeModule& gamma) {
  const FieldPtr& amb = gamma.ambient();
  Json j;
  j["field"] = field_to_json(amb);
  j["subfield_generator"] = element_to_json(gamma.ring.field.gen.lifted_to(amb));
  Json zbasis = Json::array();
  for (const FieldElement& s : gamma.ring.zbasis) zbasis.push_back(element_to_json(s.lifted_to(amb)));
  j["ring_zbasis"] = zbasis;
  Json columns = Json::array();
  for (int col = 0; col < gamma.dim; ++col) {
    Json column = Json::array();
    for (int row = 0; row < gamma.dim; ++row)
      column.push_back(element_to_json(gamma.basis(row, col).lifted_to(amb)));
    columns.push_back(column);
  }
  j["basis_columns"] = columns;
  return j;
}

FreeModule module_from_json(const Json& j) {
  FieldPtr field = field_from_json(require_key(j, "field", "module descriptor"));
  FieldElement gen =
      element_from_json(require_key(j, "subfield_generator", "module descriptor"), field);
  SubfieldEmbedding k = SubfieldEmbedding::make(field, gen);

  const Json& zbasis_json = require_key(j, "ring_zbasis", "module descriptor");
  if (!zbasis_json.is_array() || zbasis_json.empty())
    throw Error(Err::ParseError, "module \"ring_zbasis\" must be a nonempty array of elements");
  std::vector<FieldElement> zbasis;
  zbasis.reserve(zbasis_json.size());
  for (const Json& entry : zbasis_json) zbasis.push_back(element_from_json(entry, field));
  CoefficientRing ring = CoefficientRing::make(std::move(k), std::move(zbasis));

  const Json& columns = require_key(j, "basis_columns", "module descriptor");
  if (!columns.is_array() || columns.empty())
    throw Error(Err::ParseError, "module \"basis_columns\" must be a nonempty array of columns");
  const int d = static_cast<int>(columns.size());
  ExactMat basis(d, d);
  for (int col = 0; col < d; ++col) {
    const Json& column = columns.at(col);
    if (!column.is_array() || static_cast<int>(column.size()) != d)
      throw Error(Err::ParseError, "module \"basis_columns\" must form a square matrix (" +
                                       std::to_string(d) + " columns of length " +
                                       std::to_string(d) + ")");
    for (int row = 0; row < d; ++row) basis(row, col) = element_from_json(column.at(row), field);
  }
  return FreeModule::make(std::move(ring), std::move(basis));
}

Json isometry_to_json(const Isometry& r) {
  const int n = r.dim();
  FieldPtr field;
  for (int i = 0; i < n && !field; ++i)
    for (int j = 0; j < n && !field; ++j)
      if (r.mat(i, j).field()) field = r.mat(i, j).field();
  if (!field) field = AlgebraicField::rationals();

  Json j;
  j["field"] = field_to_json(field);
  Json rows = Json::array();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int k = 0; k < n; ++k) row.push_back(element_to_json(r.mat(i, k).lifted_to(field)));
    rows.push_back(row);
  }
  j["matrix"] = rows;
  j["check_orthogonal"] = true;
  return j;
}

Isometry isometry_from_json(const Json& j) {
  FieldPtr field = field_from_json(require_key(j, "field", "isometry descriptor"));
  const Json& rows = require_key(j, "matrix", "isometry descriptor");
  if (!rows.is_array() || rows.empty())
    throw Error(Err::ParseError, "isometry \"matrix\" must be a nonempty array of rows");
  const int n = static_cast<int>(rows.size());
  ExactMat mat(n, n);
  for (int i = 0; i < n; ++i) {
    const Json& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw Error(Err::ParseError, "isometry \"matrix\" must be square (" + std::to_string(n) +
                                       " rows of length " + std::to_string(n) + ")");
    for (int k = 0; k < n; ++k) mat(i, k) = element_from_json(row.at(k), field);
  }
  if (j.contains("check_orthogonal") && !j.at("check_orthogonal").is_boolean())
    throw Error(Err::ParseError, "isometry \"check_orthogonal\" must be a boolean");
  return Isometry::make(std::move(mat));
}

Json json_from_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(Err::ParseError, "invalid JSON in " + what + ": " + e.what());
  }
}

Json json_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::ParseError, "cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return json_from_text(buffer.str(), "'" + path + "'");
}

CatalogLookup resolve_target(const std::string& arg) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_regular_file(arg, ec))
    return CatalogLookup{arg, module_from_json(json_from_file(arg)), std::nullopt, std::nullopt};

  if (std::optional<CatalogLookup> hit = catalog_lookup(arg)) return std::move(*hit);

  if (const char* dir = std::getenv("COINCIDENCE_KIT_CATALOG")) {
    fs::path candidate = fs::path(dir) / (arg + ".json");
    if (fs::is_regular_file(candidate, ec))
      return CatalogLookup{arg, module_from_json(json_from_file(candidate.string())), std::nullopt,
                           std::nullopt};
  }
  throw Error(Err::BadTarget, "no descriptor file or catalog entry named '" + arg + "'");
}

FreeModule load_module(const std::string& arg) { return resolve_target(arg).module; }

Isometry load_isometry(const std::string& path) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_regular_file(path, ec))
    throw Error(Err::BadTarget, "no isometry descriptor file named '" + path + "'");
  return isometry_from_json(json_from_file(path));
}

}  // namespace cokit
