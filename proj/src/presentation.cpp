#include <map>

#include "skewdg/classifier.hpp"
#include "skewdg/errors.hpp"

namespace skewdg {

namespace {

Relation square_pair(const Scalar& a, std::size_t u, const Scalar& b, std::size_t v) {
  Relation r;
  if (sgn(a) != 0) r.push_back({a, {u, u}});
  if (sgn(b) != 0) r.push_back({b, {v, v}});
  return r;
}

Relation anticommutator(std::size_t u, std::size_t v) { return {{1, {u, v}}, {1, {v, u}}}; }
Relation commutator(std::size_t w, std::size_t u) { return {{1, {w, u}}, {-1, {u, w}}}; }

// Three-generator shape of cases (7)-(9): u, v of degree 1, w of degree 2.
GradedPresentation three_gen(const std::string& u, const std::string& v, const Scalar& cu, const Scalar& cv) {
  GradedPresentation p;
  p.generators = {{u, 1}, {v, 1}, {"[x1^2]", 2}};
  p.relations.push_back(square_pair(cu, 0, cv, 1));
  p.relations.push_back(commutator(2, 0));
  p.relations.push_back(commutator(2, 1));
  p.relations.push_back(anticommutator(0, 1));
  return p;
}

GradedPresentation polynomial_one(const std::string& z) {
  GradedPresentation p;
  p.generators = {{z, 1}};
  return p;
}

GradedPresentation z_w_mod_z2(const std::string& z, const std::string& w) {
  GradedPresentation p;
  p.generators = {{z, 1}, {w, 2}};
  p.relations.push_back({{1, {0, 0}}});
  p.relations.push_back(commutator(0, 1));
  return p;
}

}  // namespace

std::string GradedPresentation::str() const {
  std::string s = "k<";
  for (std::size_t i = 0; i < generators.size(); ++i)
    s += (i ? ", " : "") + generators[i].name + (generators[i].degree == 2 ? "(deg 2)" : "");
  s += ">";
  if (relations.empty()) return s;
  s += "/(";
  for (std::size_t r = 0; r < relations.size(); ++r) {
    if (r) s += ", ";
    bool first = true;
    for (const auto& [c, w] : relations[r]) {
      bool neg = sgn(c) < 0;
      s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      Scalar a = abs(c);
      if (a != 1) s += a.get_str() + "*";
      for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "*" : "") + generators[w[i]].name;
    }
  }
  return s + ")";
}

GradedPresentation presentation_of(const CaseLabel& label) {
  GradedPresentation p;
  switch (label.branch) {
    case Branch::Rank3:
      return p;
    case Branch::Rank2Nondeg:
      return polynomial_one("[t.x]");
    case Branch::Rank2Degenerate:
      return z_w_mod_z2("[t.x]", "[s.x^2]");
    case Branch::Rank0:
      p.generators = {{"x1", 1}, {"x2", 1}, {"x3", 1}};
      p.relations = {anticommutator(0, 1), anticommutator(0, 2), anticommutator(1, 2)};
      return p;
    case Branch::Rank1:
      break;
  }
  const Rank1Params& r = *label.rank1;
  const std::string y1 = "[l1*x1-x2]", y2 = "[l2*x1-x3]";
  switch (r.cohomology_case) {
    case 4: {
      p.generators = {{y1, 1}, {y2, 1}};
      Scalar t3 = -r.excess() / (2 * r.l1 * r.l2);
      Relation rel = square_pair(r.m12, 0, r.m13, 1);
      rel.push_back({t3, {0, 1}});
      rel.push_back({t3, {1, 0}});
      p.relations.push_back(rel);
      return p;
    }
    case 5:
      p.generators = {{y1, 1}, {y2, 1}};
      p.relations.push_back(anticommutator(0, 1));
      return p;
    case 6:
      p.generators = {{y1, 1}, {y2, 1}};
      p.relations.push_back(square_pair(r.m12, 0, r.m13, 1));
      return p;
    case 7:
      return three_gen(y1, "[x3]", r.m12, r.m13);
    case 8:
      return three_gen(y2, "[x2]", r.m13, r.m12);
    case 9:
      return three_gen("[x3]", "[x2]", r.m13, r.m12);
  }
  throw InternalError("rank-1 label without a cohomology case");
}

std::vector<std::size_t> presented_dims(const GradedPresentation& pres, unsigned dmax) {
  for (const auto& g : pres.generators)
    if (g.degree != 1 && g.degree != 2) throw Unsupported("generator degree outside {1,2}");
  std::vector<unsigned> rel_deg;
  for (const auto& rel : pres.relations) {
    if (rel.empty()) throw InputError("empty relation");
    unsigned d = 0;
    for (std::size_t g : rel[0].second) d += pres.generators[g].degree;
    for (const auto& [c, w] : rel) {
      unsigned e = 0;
      for (std::size_t g : w) e += pres.generators[g].degree;
      if (e != d) throw InputError("inhomogeneous relation");
    }
    rel_deg.push_back(d);
  }
  // words[d]: all words of total degree d
  std::vector<std::vector<Word>> words(dmax + 1);
  words[0].push_back({});
  for (unsigned d = 1; d <= dmax; ++d)
    for (std::size_t g = 0; g < pres.generators.size(); ++g) {
      unsigned gd = pres.generators[g].degree;
      if (gd > d) continue;
      for (const auto& w : words[d - gd]) {
        Word x = w;
        x.push_back(g);
        words[d].push_back(std::move(x));
      }
    }
  std::vector<std::size_t> dims(dmax + 1);
  for (unsigned d = 0; d <= dmax; ++d) {
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < words[d].size(); ++i) index.emplace(words[d][i], i);
    EchelonBasis ideal;
    for (std::size_t r = 0; r < pres.relations.size(); ++r) {
      if (rel_deg[r] > d) continue;
      unsigned rest = d - rel_deg[r];
      for (unsigned i = 0; i <= rest; ++i)
        for (const auto& a : words[i])
          for (const auto& b : words[rest - i]) {
            EchelonBasis::Sparse v;
            for (const auto& [c, w] : pres.relations[r]) {
              Word x = a;
              x.insert(x.end(), w.begin(), w.end());
              x.insert(x.end(), b.begin(), b.end());
              v[index.at(x)] += c;
            }
            for (auto it = v.begin(); it != v.end();) it = sgn(it->second) == 0 ? v.erase(it) : std::next(it);
            ideal.insert(std::move(v));
          }
    }
    dims[d] = words[d].size() - ideal.rank();
  }
  return dims;
}

TwoByTwoCase classify_n2(const Mat& m) {
  if (m.rows() != 2 || !m.is_square()) throw InputError("classify_n2 expects a 2x2 matrix");
  auto match = [](const Mat& a) -> int {
    auto nz = [&](std::size_t i, std::size_t j) { return sgn(a(i, j)) != 0; };
    bool n11 = nz(0, 0), n12 = nz(0, 1), n21 = nz(1, 0), n22 = nz(1, 1);
    Scalar det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    if (sgn(det) != 0) return 1;
    if (n11 && !n12 && !n21 && !n22) return 2;
    if (n12 && !n11 && !n21 && !n22) return 3;
    if (n11 && n12 && !n21 && !n22) return 4;
    if (n11 && n21 && !n12 && !n22) return 5;
    if (n11 && n12 && n21 && n22) return a(0, 0) * a(0, 0) != a(1, 0) * a(1, 1) ? 6 : 7;
    return 0;
  };
  TwoByTwoCase c;
  c.normalized = m;
  if (m.is_zero()) return c;
  c.row = match(m);
  if (c.row) return c;
  QplMatrix swap{{1, 0}, {1, 1}};
  c.normalized = chi(m, swap);
  c.swapped = true;
  c.row = match(c.normalized);
  if (!c.row) throw InternalError("2x2 matrix " + to_string(m) + " matches no row of the n = 2 table");
  return c;
}

GradedPresentation presentation_n2(const TwoByTwoCase& c) {
  GradedPresentation p;
  switch (c.row) {
    case 0:
      p.generators = {{"x1", 1}, {"x2", 1}};
      p.relations = {anticommutator(0, 1)};
      return p;
    case 1:
      return p;
    case 2:
    case 4:
      return polynomial_one("[x2]");
    case 3:
      return z_w_mod_z2("[x2]", "[x1^2]");
    case 5:
    case 6:
      return polynomial_one("[m21*x1-m11*x2]");
    case 7:
      return z_w_mod_z2("[m21*x1-m11*x2]", "[x2^2]");
  }
  throw InternalError("unknown n = 2 row");
}

}  // namespace skewdg
