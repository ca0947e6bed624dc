#include "skewdg/serialize.hpp"

#include <fstream>
#include <sstream>

#include "skewdg/errors.hpp"

namespace skewdg {

namespace {

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(std::to_string(j.get<long long>()));
  throw InputError("expected a rational string, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Json named_json(const std::vector<std::pair<std::string, SkewElement>>& named) {
  Json out = Json::object();
  for (const auto& [k, v] : named) out[k] = v.str();
  return out;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json scalar_json(const Scalar& s) { return to_string(s); }

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(to_string(s));
  return out;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  Vec v;
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

Mat matrix_from_json(const Json& j) {
  const Json& rows = field(j, "matrix");
  if (!rows.is_array() || rows.empty()) throw InputError("matrix must be a nonempty array of rows");
  std::vector<Vec> vs;
  for (const auto& r : rows) vs.push_back(vec_from_json(r));
  std::size_t n = vs.size();
  for (const auto& r : vs)
    if (r.size() != n) throw InputError("matrix must be square");
  if (j.contains("n")) {
    const Json& jn = j.at("n");
    if (!jn.is_number_integer() || jn.get<long long>() != static_cast<long long>(n))
      throw InputError("field n does not match the matrix size");
  }
  return Mat::from_rows(vs);
}

Json matrix_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_json(m.row(i)));
  return Json{{"n", m.rows()}, {"matrix", rows}};
}

Mat load_matrix(const std::string& path) { return matrix_from_json(parse_json(read_text_file(path))); }

Json qpl_json(const QplMatrix& c) {
  Json perm = Json::array();
  for (auto p : c.perm) perm.push_back(p + 1);
  return Json{{"perm", perm}, {"scales", vec_json(c.scales)}, {"matrix", matrix_json(c.to_mat())["matrix"]}};
}

Json scale_solution_json(const ScaleSolution& s) {
  Json roots = Json::array();
  for (const auto& r : s.roots)
    roots.push_back(Json{{"exponent", r.exponent}, {"value", to_string(r.value)}, {"rational", r.rational}});
  Json out{{"consistent", s.consistent}, {"free_parameters", s.free_parameters}, {"roots", roots}};
  out["exponent_map"] = s.exponent_map;
  if (s.rational_scales) out["rational_scales"] = vec_json(*s.rational_scales);
  return out;
}

Json label_json(const CaseLabel& label) {
  Json out{{"rank", label.rank}, {"branch", branch_name(label.branch)}, {"cohomology_case", label.cohomology_case}};
  if (label.subcase) out["subcase"] = subcase_name(*label.subcase);
  if (label.rank1) {
    const Rank1Params& p = *label.rank1;
    out["rank1"] = Json{{"m11", to_string(p.m11)}, {"m12", to_string(p.m12)}, {"m13", to_string(p.m13)},
                        {"l1", to_string(p.l1)},   {"l2", to_string(p.l2)},   {"moved_row", p.moved_row + 1}};
  }
  if (label.rank2) {
    const Rank2Data& d = *label.rank2;
    Json r{{"s", vec_json(d.s)}, {"t", vec_json(d.t)}, {"q", vec_json(d.q)}};
    if (d.r) r["r"] = vec_json(*d.r);
    if (d.u) r["u"] = vec_json(*d.u);
    if (d.v) r["v"] = vec_json(*d.v);
    out["rank2"] = r;
  }
  return out;
}

Json verdict_json(const TheoremCVerdict& v) {
  return Json{{"calabi_yau", v.calabi_yau}, {"koszul", v.koszul}, {"smooth", v.homologically_smooth}, {"reason", v.reason}};
}

Json probe_json(const ProbeResult& p) {
  Json out{{"verdict", p.verdict == ProbeVerdict::CalabiYau ? "CalabiYau" : "NotSmooth"},
           {"branch", p.branch},
           {"h1_dim", p.h1_dim},
           {"relation_count", p.relation_count}};
  if (p.relation) out["relation"] = vec_json(*p.relation);
  return out;
}

Json resolution_json(const SemifreeResolution& r) {
  Json rows = Json::array();
  for (std::size_t j = 0; j < r.size; ++j) {
    Json row = Json::array();
    for (std::size_t l = 0; l < j; ++l) row.push_back(r.d[j][l].str());
    rows.push_back(row);
  }
  Json out{{"size", r.size}, {"subcase", r.subcase}, {"base", matrix_json(r.base)}, {"rows", rows},
           {"named", named_json(r.named)}};
  if (r.iso_over_closure) out["iso_over_closure"] = true;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

SemifreeResolution resolution_from_json(const Json& j) {
  Mat base = matrix_from_json(field(j, "base"));
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : field(j, "rows")) rows.push_back(row.get<std::vector<std::string>>());
  SemifreeResolution r = resolution_from_rows(base, rows, field(j, "subcase").get<std::string>());
  if (r.size != field(j, "size").get<std::size_t>()) throw InputError("size does not match the row count");
  if (j.contains("named"))
    for (const auto& [k, v] : j.at("named").items()) r.named.push_back({k, parse_element(v.get<std::string>(), base.rows())});
  r.iso_over_closure = j.value("iso_over_closure", false);
  r.note = j.value("note", std::string());
  return r;
}

Json infinite_json(const InfinitePattern& p) {
  Json out{{"kind", "infinite"}, {"relation", vec_json(p.relation)}, {"named", named_json(p.named)}};
  if (p.truncation) out["truncation"] = *p.truncation;
  return out;
}

Json verify_json(const VerifyRecord& v) {
  Json out{{"minimal", v.minimal}, {"square_zero", v.square_zero}, {"exact", v.exact}, {"homology", v.homology}};
  if (!v.failure.empty()) out["failure"] = v.failure;
  return out;
}

Json algebra_json(const FinAlg& e) {
  Json s = Json::array();
  for (const auto& c : e.structure) s.push_back(to_string(c));
  return Json{{"dim", e.dim}, {"unit", vec_json(e.unit)}, {"structure", s}};
}

FinAlg algebra_from_json(const Json& j) {
  const Json& jd = field(j, "dim");
  if (!jd.is_number_integer() || jd.get<long long>() <= 0) throw InputError("dim must be a positive integer");
  std::size_t dim = jd.get<std::size_t>();
  Vec unit = vec_from_json(field(j, "unit"));
  Vec structure = vec_from_json(field(j, "structure"));
  if (unit.size() != dim) throw InputError("unit has the wrong length");
  if (structure.size() != dim * dim * dim) throw InputError("structure must have dim^3 entries");
  return make_algebra(dim, unit, structure);
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace skewdg
