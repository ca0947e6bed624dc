#include "skewdg/report.hpp"

#include "skewdg/errors.hpp"

namespace skewdg {

namespace {

Json frob_json(const FrobeniusVerdict& v) {
  Json out{{"frobenius", v.frobenius}, {"symmetric", v.symmetric}, {"method", v.method}, {"decisive", v.decisive}};
  if (v.witness) out["witness"] = vec_json(*v.witness);
  return out;
}

struct Summary {
  Json body;
  std::vector<std::size_t> dims;
  std::optional<std::size_t> ext_dim;
  std::string label;
  std::vector<std::string> findings;
};

Summary summarize(const Mat& m, unsigned max_degree, std::uint64_t seed) {
  Summary s;
  DgSpec spec(m);
  s.dims = cohomology_dims(spec, max_degree);
  s.body["input"] = matrix_json(m);
  s.body["cohomology_dims"] = s.dims;
  auto check_presented = [&](const GradedPresentation& p) {
    std::vector<std::size_t> pd = presented_dims(p, max_degree);
    s.body["presentation"] = p.str();
    s.body["presented_dims"] = pd;
    if (pd != s.dims) s.findings.push_back("brute-force cohomology dims differ from the presented algebra");
  };

  if (spec.n == 2) {
    TwoByTwoCase c = classify_n2(m);
    s.body["n2_row"] = c.row;
    s.body["n2_swapped"] = c.swapped;
    s.label = "n2-row-" + std::to_string(c.row);
    check_presented(presentation_n2(c));
    return s;
  }
  if (spec.n != 3) {
    s.label = "n=" + std::to_string(spec.n);
    return s;
  }

  CaseLabel label = classify(m);
  s.label = label.describe();
  s.body["classification"] = label_json(label);
  check_presented(presentation_of(label));
  TheoremCVerdict tc = theorem_c(label);
  s.body["theorem_c"] = verdict_json(tc);
  ProbeResult probe = cy_probe(spec);
  s.body["probe"] = probe_json(probe);
  if ((probe.verdict == ProbeVerdict::CalabiYau) != tc.calabi_yau)
    s.findings.push_back("theorem_c and cy_probe disagree");

  // independent construction: kill H^1(F) greedily, then check exactness
  Json generic;
  std::optional<SemifreeResolution> killed;
  try {
    killed = minimal_resolution(spec, 16);
    VerifyRecord v = verify_resolution(spec, *killed, 8);
    generic = Json{{"size", killed->size}, {"exact_through_degree", v.ok() ? 7 : 0}, {"verify", verify_json(v)}};
    if (!v.ok()) killed.reset();
  } catch (const Unsupported& e) {
    generic = Json{{"size", nullptr}, {"note", e.what()}};
  }
  s.body["cocycle_killing"] = generic;

  BuildResult built = build_resolution(m);
  if (auto* r = std::get_if<SemifreeResolution>(&built)) {
    s.body["resolution"] = resolution_json(*r);
    VerifyRecord v = verify_resolution(DgSpec(r->base), *r, 5);
    s.body["verify"] = verify_json(v);
    if (!v.ok()) s.findings.push_back("resolution failed verification: " + v.failure);
    FinAlg e = ext_algebra(*r);
    s.ext_dim = e.dim;
    Json ext{{"dim", e.dim}};
    if (auto t = recognize_truncated(e)) ext["truncated_polynomial"] = *t;
    if (local_radical(e)) {
      ext["socle_dim"] = socle_dim(e);
      ext["radical_filtration"] = radical_filtration(e);
    }
    FrobeniusVerdict fv = frobenius(e, 64, seed);
    ext["frobenius"] = frob_json(fv);
    s.body["ext"] = ext;
    if (e.dim != r->size) s.findings.push_back("Ext dimension differs from the resolution size");
    if (v.ok() && killed && killed->size != r->size && !r->iso_over_closure)
      s.findings.push_back("case resolution and cocycle-killing resolution have different sizes");
    if (tc.calabi_yau && fv.decisive && !fv.symmetric)
      s.findings.push_back("CY verdict but the Ext algebra is not symmetric Frobenius");
  } else if (auto* ip = std::get_if<InfinitePattern>(&built)) {
    s.body["resolution"] = infinite_json(*ip);
    if (tc.homologically_smooth) s.findings.push_back("infinite pattern emitted for a smooth case");
    if (killed)
      s.findings.push_back("declared not smooth, but a finite minimal F of size " + std::to_string(killed->size) +
                           " is exact through degree 7");
  } else {
    s.body["resolution"] = Json{{"kind", "unsupported"}, {"reason", std::get<UnsupportedCase>(built).reason}};
  }
  return s;
}

}  // namespace

Report build_report(const Mat& m, unsigned max_degree, const std::optional<Mat>& compare, std::uint64_t seed) {
  Summary a = summarize(m, max_degree, seed);
  Report rep;
  rep.body = a.body;
  std::vector<std::string> findings = a.findings;
  if (compare) {
    if (compare->rows() != m.rows()) throw InputError("compared matrices must have the same size");
    Summary b = summarize(*compare, max_degree, seed);
    for (const auto& f : b.findings) findings.push_back("compare: " + f);
    Json cmp = b.body;
    bool same_h = a.dims == b.dims;
    cmp["same_cohomology_dims"] = same_h;
    if (a.ext_dim && b.ext_dim) {
      bool differ = *a.ext_dim != *b.ext_dim;
      cmp["ext_dims"] = {*a.ext_dim, *b.ext_dim};
      cmp["non_quasi_isomorphic"] = differ;
      if (differ && same_h)
        cmp["note"] = "equal cohomology dimensions through degree " + std::to_string(max_degree) + " but Ext dims " +
                      std::to_string(*a.ext_dim) + " != " + std::to_string(*b.ext_dim);
    }
    rep.body["compare"] = cmp;
  }
  rep.consistent = findings.empty();
  rep.body["consistent"] = rep.consistent;
  if (!findings.empty()) rep.body["findings"] = findings;
  return rep;
}

}  // namespace skewdg
