#include "skewdg/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "skewdg/errors.hpp"
#include "skewdg/report.hpp"

namespace skewdg {

namespace {

constexpr int kOk = 0, kInput = 1, kUnsupported = 2, kInternal = 3;

struct Options {
  bool pretty = false;
  std::uint64_t seed = 0;
  std::string input, other;
  unsigned max_degree = 6;
  unsigned truncate = 8;
  unsigned verify = 0;
  unsigned samples = 50;
  std::string compare;
};

Json cohomology_cmd(const Mat& m, unsigned dmax) {
  CohomologyReport r = cohomology(DgSpec(m), dmax);
  Json h1 = Json::array(), h2 = Json::array();
  for (const auto& e : r.h1_basis) h1.push_back(e.str());
  for (const auto& e : r.h2.cocycle_reps) h2.push_back(e.str());
  return Json{{"dims", r.dims}, {"boundary_ranks", r.boundary_ranks}, {"h1_basis", h1}, {"h2_new_cocycles", h2}};
}

Json classify_cmd(const Mat& m) {
  if (m.rows() == 2) {
    TwoByTwoCase c = classify_n2(m);
    return Json{{"n2_row", c.row}, {"swapped", c.swapped}, {"presentation", presentation_n2(c).str()}};
  }
  if (m.rows() != 3) throw Unsupported("classification covers n = 2 and n = 3");
  CaseLabel label = classify(m);
  Json out = label_json(label);
  TheoremCVerdict v = theorem_c(label);
  out["calabi_yau"] = v.calabi_yau;
  out["koszul"] = v.koszul;
  out["smooth"] = v.homologically_smooth;
  out["reason"] = v.reason;
  out["presentation"] = presentation_of(label).str();
  return out;
}

Json iso_cmd(const Mat& a, const Mat& b) {
  IsoResult r = iso_solve(a, b);
  Json out;
  switch (r.status) {
    case IsoStatus::NotIsomorphic: out["status"] = "not_isomorphic"; break;
    case IsoStatus::Witness:
      out["status"] = "witness";
      out["witness"] = qpl_json(*r.witness);
      break;
    case IsoStatus::ClosureOnly:
      out["status"] = "closure_only";
      out["perm"] = perm_str(r.perm);
      out["scales"] = scale_solution_json(r.scales);
      break;
  }
  out["certificate"] = r.certificate;
  return out;
}

Json aut_cmd(const Mat& m) {
  Json out = Json::array();
  for (const auto& rec : aut_group(m))
    out.push_back(Json{{"perm", perm_str(rec.perm)}, {"equations", rec.equations}, {"scales", scale_solution_json(rec.scales)}});
  return Json{{"count", out.size()}, {"components", out}};
}

SemifreeResolution finite_or_throw(const BuildResult& b) {
  if (auto* r = std::get_if<SemifreeResolution>(&b)) return *r;
  if (std::get_if<InfinitePattern>(&b)) throw Unsupported("not homologically smooth: the resolution is infinite");
  throw Unsupported(std::get<UnsupportedCase>(b).reason);
}

int resolve_cmd(const Mat& m, const Options& o, Json& out) {
  BuildResult b = build_resolution(m, o.truncate);
  if (auto* u = std::get_if<UnsupportedCase>(&b)) throw Unsupported(u->reason);
  if (auto* ip = std::get_if<InfinitePattern>(&b)) {
    out = infinite_json(*ip);
    return kOk;
  }
  const auto& r = std::get<SemifreeResolution>(b);
  out = resolution_json(r);
  if (o.verify) {
    VerifyRecord v = verify_resolution(DgSpec(r.base), r, o.verify);
    out["verify"] = verify_json(v);
    if (!v.ok()) return kInternal;
  }
  return kOk;
}

Json ext_cmd(const Mat& m, std::uint64_t seed) {
  SemifreeResolution r = finite_or_throw(build_resolution(m));
  FinAlg e = ext_algebra(r);
  Json out{{"dim", e.dim}, {"subcase", r.subcase}};
  if (auto t = recognize_truncated(e)) {
    out["recognized"] = "k[x]/(x^" + std::to_string(*t) + ")";
    out["truncated_polynomial"] = *t;
  }
  if (local_radical(e)) {
    out["socle_dim"] = socle_dim(e);
    out["radical_filtration"] = radical_filtration(e);
  }
  FrobeniusVerdict v = frobenius(e, 64, seed);
  out["frobenius"] = v.frobenius;
  out["symmetric"] = v.symmetric;
  out["method"] = v.method;
  out["structure"] = algebra_json(e);
  return out;
}

Json frobenius_cmd(const std::string& path, std::uint64_t seed) {
  FinAlg e = algebra_from_json(parse_json(read_text_file(path)));
  FrobeniusVerdict v = frobenius(e, 64, seed);
  Json out{{"dim", e.dim}, {"frobenius", v.frobenius}, {"symmetric", v.symmetric}, {"method", v.method},
           {"decisive", v.decisive}};
  if (v.witness) out["witness"] = vec_json(*v.witness);
  if (!v.frobenius && !v.decisive) out["note"] = "no certificate found";
  if (auto t = recognize_truncated(e)) out["truncated_polynomial"] = *t;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"skewdg: DG structures on the skew polynomial algebra"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--pretty", o.pretty, "indented output");
  app.add_option("--seed", o.seed, "seed for certificate search");

  auto input = [&](CLI::App* sub) { sub->add_option("input", o.input, "matrix JSON file")->required(); };
  auto* validate = app.add_subcommand("validate", "check d^2 = 0 and Leibniz");
  input(validate);
  validate->add_option("--max-degree", o.max_degree);
  validate->add_option("--samples", o.samples);
  auto* coh = app.add_subcommand("cohomology", "brute-force cohomology");
  input(coh);
  coh->add_option("--max-degree", o.max_degree);
  auto* cls = app.add_subcommand("classify", "case label and CY verdict");
  input(cls);
  auto* probe = app.add_subcommand("probe", "cup-product CY probe");
  input(probe);
  auto* iso = app.add_subcommand("iso", "QPL isomorphism search");
  input(iso);
  iso->add_option("other", o.other, "second matrix file")->required();
  auto* aut = app.add_subcommand("aut", "automorphism components");
  input(aut);
  auto* res = app.add_subcommand("resolve", "minimal semi-free resolution of k");
  input(res);
  res->add_option("--truncate", o.truncate);
  res->add_option("--verify", o.verify);
  auto* ext = app.add_subcommand("ext", "Ext algebra as a commutant");
  input(ext);
  auto* frob = app.add_subcommand("frobenius", "Frobenius test on a structure-constant file");
  frob->add_option("structure", o.input, "structure JSON file")->required();
  auto* rep = app.add_subcommand("report", "cross-checked bundle");
  input(rep);
  rep->add_option("--max-degree", o.max_degree);
  rep->add_option("--compare", o.compare, "second matrix file");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInput;
  }

  Json result;
  int code = kOk;
  try {
    if (*frob) {
      result = frobenius_cmd(o.input, o.seed);
    } else {
      Mat m = load_matrix(o.input);
      if (*validate) {
        DifferentialCheck c = check_differential(DgSpec(m), o.max_degree, o.seed, o.samples);
        result = Json{{"square_zero", c.square_zero}, {"leibniz", c.leibniz}};
        if (!c.failure.empty()) result["failure"] = c.failure;
        if (!c.square_zero || !c.leibniz) code = kInternal;
      } else if (*coh) {
        result = cohomology_cmd(m, o.max_degree);
      } else if (*cls) {
        result = classify_cmd(m);
      } else if (*probe) {
        if (m.rows() != 3) throw Unsupported("the probe covers n = 3");
        result = probe_json(cy_probe(DgSpec(m)));
      } else if (*iso) {
        result = iso_cmd(m, load_matrix(o.other));
      } else if (*aut) {
        result = aut_cmd(m);
      } else if (*res) {
        code = resolve_cmd(m, o, result);
      } else if (*ext) {
        result = ext_cmd(m, o.seed);
      } else if (*rep) {
        std::optional<Mat> cmp;
        if (!o.compare.empty()) cmp = load_matrix(o.compare);
        Report r = build_report(m, o.max_degree, cmp, o.seed);
        result = r.body;
        if (!r.consistent) code = kInternal;
      }
    }
  } catch (const InputError& e) {
    err << Json{{"error", "input"}, {"message", e.what()}}.dump() << "\n";
    return kInput;
  } catch (const Unsupported& e) {
    err << Json{{"error", "unsupported"}, {"message", e.what()}}.dump() << "\n";
    return kUnsupported;
  } catch (const InternalError& e) {
    err << Json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return kInternal;
  }
  out << dump(result, o.pretty) << "\n";
  if (code == kInternal) err << Json{{"error", "internal"}, {"message", "cross-check inconsistency"}}.dump() << "\n";
  return code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace skewdg
