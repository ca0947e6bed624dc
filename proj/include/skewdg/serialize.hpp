#pragma once

#include <string>

#include <json.hpp>

#include "skewdg/classifier.hpp"
#include "skewdg/dg_core.hpp"
#include "skewdg/frob_algebra.hpp"
#include "skewdg/qpl_action.hpp"
#include "skewdg/resolution.hpp"

namespace skewdg {

using Json = nlohmann::ordered_json;

std::string read_text_file(const std::string& path);
Json parse_json(const std::string& text);

Json scalar_json(const Scalar& s);
Json vec_json(const Vec& v);
Vec vec_from_json(const Json& j);

// {"n":3,"matrix":[["1","0","1"],...]}
Mat matrix_from_json(const Json& j);
Json matrix_json(const Mat& m);
Mat load_matrix(const std::string& path);

Json qpl_json(const QplMatrix& c);
Json scale_solution_json(const ScaleSolution& s);
Json label_json(const CaseLabel& label);
Json verdict_json(const TheoremCVerdict& v);
Json probe_json(const ProbeResult& p);

Json resolution_json(const SemifreeResolution& r);
SemifreeResolution resolution_from_json(const Json& j);
Json infinite_json(const InfinitePattern& p);
Json verify_json(const VerifyRecord& v);

// {"dim":m,"unit":[...],"structure":[dim^3 strings]}
Json algebra_json(const FinAlg& e);
FinAlg algebra_from_json(const Json& j);

std::string dump(const Json& j, bool pretty);

}  // namespace skewdg
