#include "eamod/io.hpp"

#include <fstream>
#include <sstream>

#include "eamod/error.hpp"

namespace eamod {

namespace {

constexpr const char* kFormat = "eamod-v1";

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::FormatError, std::string("missing key '") + key + "'");
  return j.at(key);
}

std::uint64_t as_uint(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    fail(ErrorCode::FormatError, std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

}  // namespace

Json field_to_json(const FieldCtx& field) {
  Json j;
  j["p"] = field.p();
  j["m"] = field.m();
  j["irr"] = field.modulus();
  return j;
}

FieldCtx field_from_json(const Json& j) {
  const std::uint64_t p = as_uint(member(j, "p"), "field.p");
  const std::uint64_t m = as_uint(member(j, "m"), "field.m");
  const Json& irr = member(j, "irr");
  if (!irr.is_array() || irr.size() != m + 1) fail(ErrorCode::FormatError, "field.irr must have m+1 entries");
  std::vector<std::uint64_t> coeffs;
  for (const auto& c : irr) coeffs.push_back(as_uint(c, "field.irr entry"));
  return FieldCtx::from_modulus(p, std::move(coeffs));
}

Json element_to_json(const FieldCtx& field, Fel a) { return field.coeffs(a); }

Fel element_from_json(const FieldCtx& field, const Json& j) {
  if (!j.is_array() || j.size() != field.m()) fail(ErrorCode::FormatError, "entry must be a coefficient array of length m");
  std::uint64_t code = 0;
  for (std::size_t i = j.size(); i-- > 0;) {
    const std::uint64_t c = as_uint(j[i], "coefficient");
    if (c >= field.p()) fail(ErrorCode::FormatError, "coefficient not reduced mod p");
    code = code * field.p() + c;
  }
  return field.element(code);
}

Json point_to_json(const FieldCtx& field, const Point& a) {
  Json j = Json::array();
  for (Fel c : a.coords) j.push_back(element_to_json(field, c));
  return j;
}

Json module_to_json(const EAModule& m) {
  Json j;
  j["format"] = kFormat;
  j["p"] = m.p();
  j["k"] = m.k();
  j["dim"] = m.dim();
  j["field"] = field_to_json(m.field());
  Json gens = Json::array();
  for (const auto& g : m.gens()) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < g.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(element_to_json(m.field(), g(r, c)));
      rows.push_back(std::move(row));
    }
    gens.push_back(std::move(rows));
  }
  j["generators"] = std::move(gens);
  return j;
}

EAModule module_from_json(const Json& j) {
  const Json& fmt = member(j, "format");
  if (!fmt.is_string() || fmt.get<std::string>() != kFormat) fail(ErrorCode::FormatError, "unsupported format tag");
  const std::uint64_t p = as_uint(member(j, "p"), "p");
  const std::uint64_t k = as_uint(member(j, "k"), "k");
  const std::uint64_t dim = as_uint(member(j, "dim"), "dim");
  const FieldCtx field = field_from_json(member(j, "field"));
  if (field.p() != p) fail(ErrorCode::FormatError, "p disagrees with the field");
  const Json& gens = member(j, "generators");
  if (!gens.is_array() || gens.size() != k) fail(ErrorCode::FormatError, "expected k generator matrices");
  std::vector<MatF> mats;
  for (const auto& g : gens) {
    if (!g.is_array() || g.size() != dim) fail(ErrorCode::FormatError, "generator must have dim rows");
    MatF mat(field, dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      if (!g[r].is_array() || g[r].size() != dim) fail(ErrorCode::FormatError, "generator row must have dim entries");
      for (std::size_t c = 0; c < dim; ++c) mat(r, c) = element_from_json(field, g[r][c]);
    }
    mats.push_back(std::move(mat));
  }
  EAModule m(field, dim, std::move(mats));
  validate(m);
  return m;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

EAModule read_module_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseFailure, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
  return module_from_json(j);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::WriteFailure, "cannot open " + path);
  out << text;
  out.flush();
  if (!out) fail(ErrorCode::WriteFailure, "cannot write " + path);
}

Json report_to_json(const PointSetReport& r) {
  Json j;
  j["field"] = field_to_json(r.field);
  j["k"] = r.k;
  Json pts = Json::array();
  for (const auto& rec : r.points) {
    Json pj;
    pj["coords"] = point_to_json(r.field, rec.point);
    pj["type"] = rec.type.mult;
    pj["free"] = rec.free;
    pts.push_back(std::move(pj));
  }
  j["points"] = std::move(pts);
  j["variety_points"] = r.variety_count();
  if (r.comparison) {
    j["target"] = r.target;
    j["verdict"] = verdict_name(r.comparison->verdict);
    Json only_v = Json::array();
    for (const auto& p : r.comparison->only_in_first) only_v.push_back(point_to_json(r.field, p));
    Json only_t = Json::array();
    for (const auto& p : r.comparison->only_in_second) only_t.push_back(point_to_json(r.field, p));
    j["only_in_variety"] = std::move(only_v);
    j["only_in_target"] = std::move(only_t);
  } else {
    j["verdict"] = "None";
  }
  return j;
}

std::string report_to_csv(const PointSetReport& r) {
  std::ostringstream os;
  os << "coords,type,free\n";
  for (const auto& rec : r.points) {
    os << '"' << format_point(r.field, rec.point) << "\"," << rec.type.label() << ',' << (rec.free ? "true" : "false")
       << '\n';
  }
  return os.str();
}

Json rank_lemma_to_json(const SymContext& ctx, const FieldCtx& field, const RankLemmaReport& r) {
  Json j;
  j["p"] = ctx.p;
  j["k"] = ctx.k;
  j["field"] = field_to_json(field);
  j["points"] = r.points;
  j["sampled"] = r.sampled;
  Json clauses = Json::array();
  for (const auto& c : r.clauses) {
    Json cj;
    cj["clause"] = c.clause;
    cj["points_checked"] = c.points_checked;
    Json f = Json::array();
    for (const auto& p : c.failures) f.push_back(point_to_json(field, p));
    cj["failures"] = std::move(f);
    clauses.push_back(std::move(cj));
  }
  j["clauses"] = std::move(clauses);
  return j;
}

}  // namespace eamod
