#include "skewdg/resolution.hpp"

#include "skewdg/errors.hpp"
#include "skewdg/qpl_action.hpp"

namespace skewdg {

namespace {

using Grid = std::vector<std::vector<SkewElement>>;

Grid zero_grid(std::size_t size, std::size_t n) {
  return Grid(size, std::vector<SkewElement>(size, SkewElement(n)));
}

// entries fill columns 0, 1, ... of row j
void set_row(Grid& d, std::size_t j, const std::vector<SkewElement>& entries) {
  for (std::size_t l = 0; l < entries.size(); ++l) d[j][l] = entries[l];
}

SemifreeResolution make(const Mat& base, Grid d, std::string label) {
  SemifreeResolution r;
  r.size = d.size();
  r.d = std::move(d);
  r.base = base;
  r.subcase = std::move(label);
  return r;
}

SkewElement scaled(const Scalar& c, const SkewElement& e) { return c * e; }

SemifreeResolution rank2_resolution(const Mat& m, const CaseLabel& label) {
  const Rank2Data& a = *label.rank2;
  const std::size_t n = 3;
  SkewElement z(n);
  SkewElement tx = SkewElement::linear(a.t);
  SkewElement sigma = SkewElement::linear(a.q);
  std::optional<SkewElement> tau, lambda, omega;
  if (a.r) tau = SkewElement::linear(*a.r);
  if (a.u) lambda = SkewElement::linear(*a.u);
  if (a.v) omega = SkewElement::linear(*a.v);

  Subcase sc = *label.subcase;
  Grid d = zero_grid(subcase_length(sc), n);
  std::vector<std::pair<std::string, SkewElement>> named = {{"t.x", tx}, {"sigma", sigma}};

  switch (sc) {
    case Subcase::S1_1:
      set_row(d, 1, {tx});
      set_row(d, 2, {sigma, tx});
      break;
    case Subcase::S1_2_1:
      set_row(d, 1, {tx});
      set_row(d, 2, {sigma, tx});
      set_row(d, 3, {z, sigma, tx});
      break;
    case Subcase::S1_2_2:
      set_row(d, 1, {tx});
      set_row(d, 2, {sigma, tx});
      set_row(d, 3, {z, sigma, tx});
      set_row(d, 4, {*lambda, z, sigma, tx});
      named.push_back({"lambda", *lambda});
      break;
    case Subcase::S1_2_3:
      set_row(d, 1, {tx});
      set_row(d, 2, {sigma, tx});
      set_row(d, 3, {z, sigma, tx});
      set_row(d, 4, {*lambda, z, sigma, tx});
      set_row(d, 5, {scaled(2, *omega), *lambda, z, sigma, tx});
      named.push_back({"lambda", *lambda});
      named.push_back({"omega", *omega});
      break;
    case Subcase::S1_2_4: {
      std::vector<std::size_t> tnz, qnz;
      for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a.t[i]) != 0) tnz.push_back(i);
        if (sgn(a.q[i]) != 0) qnz.push_back(i);
      }
      if (tnz.size() != 1 || qnz.size() != 1 || tnz[0] == qnz[0])
        throw InternalError("subcase 1.2.4 without the expected coordinate structure: t = " + SkewElement::linear(a.t).str() +
                            ", q = " + sigma.str());
      std::size_t c = tnz[0], b = qnz[0];
      Vec u = *a.u;
      Scalar k = u[c] / a.t[c];
      for (std::size_t i = 0; i < n; ++i) u[i] -= k * a.t[i];
      SkewElement lam = SkewElement::linear(u);
      SkewElement eta = scaled(2 * u[b] / a.q[b], lam);
      SkewElement tc = SkewElement::letter(n, c + 1, a.t[c]);
      set_row(d, 1, {tc});
      set_row(d, 2, {sigma, tx});
      set_row(d, 3, {z, sigma, tx});
      set_row(d, 4, {lam, z, sigma, tx});
      set_row(d, 5, {z, lam, z, sigma, tx});
      set_row(d, 6, {eta, z, lam, z, sigma, tx});
      set_row(d, 7, {z, eta, z, lam, z, sigma, tx});
      named.push_back({"lambda", lam});
      named.push_back({"eta", eta});
      break;
    }
    case Subcase::S1_3_1:
      set_row(d, 1, {tx});
      set_row(d, 2, {sigma, tx});
      set_row(d, 3, {scaled(2, *tau), sigma, tx});
      named.push_back({"tau", *tau});
      break;
    case Subcase::S1_3_2:
      set_row(d, 1, {tx});
      set_row(d, 2, {sigma, tx});
      set_row(d, 3, {scaled(2, *tau), sigma, tx});
      set_row(d, 4, {*lambda, scaled(2, *tau), sigma, tx});
      set_row(d, 5, {scaled(2, *omega), *lambda, scaled(2, *tau), sigma, tx});
      named.push_back({"tau", *tau});
      named.push_back({"lambda", *lambda});
      named.push_back({"omega", *omega});
      break;
  }
  SemifreeResolution r = make(m, std::move(d), subcase_name(sc));
  r.named = std::move(named);
  return r;
}

// f(x'_{perm[i]}) = x_i / scales[i], the DG isomorphism A(chi(M, c)) -> A(M).
SkewElement transport_linear(const SkewElement& e, const QplMatrix& c) {
  if (e.is_zero()) return e;
  if (e.homogeneous_degree() != 1) throw InternalError("transport expects degree-1 entries, got " + e.str());
  std::size_t n = c.n();
  Vec src(n), out(n);
  for (std::size_t k = 0; k < n; ++k) src[k] = e.coefficient(SkewMonomial::letter(n, k + 1));
  for (std::size_t i = 0; i < n; ++i) out[i] = src[c.perm[i]] / c.scales[i];
  return SkewElement::linear(out);
}

SemifreeResolution transport(const SemifreeResolution& r, const QplMatrix& c, const Mat& target) {
  SemifreeResolution t = r;
  t.base = target;
  for (auto& row : t.d)
    for (auto& e : row) e = transport_linear(e, c);
  for (auto& [name, e] : t.named) e = transport_linear(e, c);
  return t;
}

Vec square_coords(const SkewElement& e) {
  std::size_t n = e.n();
  Vec c(n);
  for (const auto& [mono, coef] : e.terms()) {
    std::size_t hit = n;
    for (std::size_t i = 0; i < n; ++i)
      if (mono.exponents[i] == 2) hit = i;
    if (hit == n || mono.degree() != 2) throw InternalError("expected a combination of squares, got " + e.str());
    c[hit] = coef;
  }
  return c;
}

Vec impcri_relation(const Rank1Params& p) {
  switch (p.cohomology_case) {
    case 4: return {p.m12, p.m13, -p.excess() / (2 * p.l1 * p.l2)};
    case 5: return {0, 0, 1};
    case 6: return {p.m12, p.m13, 0};
  }
  throw InternalError("impcri relation requested for case " + std::to_string(p.cohomology_case));
}

std::string scaled_name(const Scalar& c, const std::string& name) {
  if (c == 1) return name;
  if (c == -1) return "-" + name;
  return to_string(c) + "*" + name;
}

std::string linear_str(const Scalar& a, const std::string& u, const Scalar& b, const std::string& v) {
  if (sgn(a) == 0 && sgn(b) == 0) return "0";
  if (sgn(a) == 0) return scaled_name(b, v);
  if (sgn(b) == 0) return scaled_name(a, u);
  std::string tail = sgn(b) < 0 ? " - " + scaled_name(-b, v) : " + " + scaled_name(b, v);
  return scaled_name(a, u) + tail;
}

BuildResult rank1_resolution(const Mat& m, const CaseLabel& label, unsigned truncate) {
  const Rank1Params& p = *label.rank1;
  const std::size_t n = 3;
  int cc = p.cohomology_case;
  if (cc >= 4 && cc <= 6) {
    SkewElement y1 = SkewElement::linear({p.l1, -1, 0});
    SkewElement y2 = SkewElement::linear({p.l2, 0, -1});
    Vec t = impcri_relation(p);
    if (!theorem_c(label).homologically_smooth) {
      InfinitePattern ip;
      ip.relation = t;
      ip.named = {{"y1", transport_linear(y1, p.normalizer)}, {"y2", transport_linear(y2, p.normalizer)}};
      std::string ell = sgn(t[0]) != 0 ? linear_str(t[0], "[y1]", t[2], "[y2]") : linear_str(t[2], "[y1]", t[1], "[y2]");
      std::vector<std::string> lines = {"d1(e_y1) = [y1]", "d1(e_y2) = [y2]",
                                        "d2(e2) = (" + linear_str(t[0], "[y1]", t[2], "[y2]") + ")*e_y1 + (" +
                                            linear_str(t[2], "[y1]", t[1], "[y2]") + ")*e_y2"};
      for (unsigned k = 3; k <= truncate; ++k)
        lines.push_back("d" + std::to_string(k) + "(e" + std::to_string(k) + ") = (" + ell + ")*e" + std::to_string(k - 1));
      ip.truncation = lines;
      return ip;
    }
    SkewElement rel = t[0] * (y1 * y1) + t[1] * (y2 * y2) + t[2] * (y1 * y2 + y2 * y1);
    auto sol = solve_linear(p.normalized.transpose(), square_coords(rel));
    if (!sol.particular) throw InternalError("no correction term w for the rank-1 resolution of " + to_string(m));
    SkewElement w = SkewElement::linear(*sol.particular);
    Grid d = zero_grid(4, n);
    set_row(d, 1, {y1});
    set_row(d, 2, {y2});
    set_row(d, 3, {w, t[0] * y1 + t[2] * y2, t[1] * y2 + t[2] * y1});
    SemifreeResolution r = make(p.normalized, std::move(d), "rank1-case-" + std::to_string(cc));
    r.named = {{"y1", y1}, {"y2", y2}, {"w", w}};
    return transport(r, p.normalizer, m);
  }

  int rep = 0;
  bool b12 = sgn(p.m12) != 0, b13 = sgn(p.m13) != 0;
  if (cc == 9) rep = b12 && b13 ? 1 : 2;
  else if (cc == 7) rep = b12 && b13 ? 3 : (!b12 ? 4 : 5);
  else if (cc == 8) rep = b12 && b13 ? 3 : (!b12 ? 5 : 4);
  else throw InternalError("unexpected rank-1 case " + std::to_string(cc));

  Mat target = representative_matrix(rep);
  IsoResult iso = iso_solve(m, target);
  SemifreeResolution base = representative_resolution(rep);
  std::string label_str = "rank1-case-" + std::to_string(cc) + " via M" + std::to_string(rep);
  if (iso.status == IsoStatus::Witness) {
    SemifreeResolution r = transport(base, *iso.witness, m);
    r.subcase = label_str;
    r.note = "transported along " + to_string(*iso.witness);
    return r;
  }
  if (iso.status == IsoStatus::ClosureOnly) {
    base.subcase = label_str;
    base.iso_over_closure = true;
    for (const auto& line : iso.certificate) base.note += (base.note.empty() ? "" : "; ") + line;
    return base;
  }
  throw InternalError("rank-1 case " + std::to_string(cc) + " matrix " + to_string(m) + " is not isomorphic to M" +
                      std::to_string(rep));
}

}  // namespace

BuildResult build_resolution(const Mat& m, unsigned truncate) {
  if (m.rows() != 3 || !m.is_square()) throw InputError("resolutions are built for 3x3 matrices");
  CaseLabel label = classify(m);
  switch (label.branch) {
    case Branch::Rank3: {
      SemifreeResolution r = make(m, zero_grid(1, 3), "Rank3");
      return r;
    }
    case Branch::Rank2Degenerate:
      return rank2_resolution(m, label);
    case Branch::Rank1:
      return rank1_resolution(m, label, truncate);
    case Branch::Rank2Nondeg:
      return UnsupportedCase{"no resolution is constructed for the rank-2 nondegenerate branch"};
    case Branch::Rank0:
      return UnsupportedCase{"no resolution is constructed for M = 0"};
  }
  throw InternalError("unknown branch");
}

SemifreeResolution resolution_from_rows(const Mat& base, const std::vector<std::vector<std::string>>& rows,
                                        const std::string& label) {
  std::size_t n = base.rows();
  Grid d = zero_grid(rows.size(), n);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() > j) throw InputError("row " + std::to_string(j) + " reaches the diagonal");
    for (std::size_t l = 0; l < rows[j].size(); ++l) d[j][l] = parse_element(rows[j][l], n);
  }
  return make(base, std::move(d), label);
}

Mat representative_matrix(int i) {
  switch (i) {
    case 1: return Mat::from_ints({{0, 1, 1}, {0, 0, 0}, {0, 0, 0}});
    case 2: return Mat::from_ints({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
    case 3: return Mat::from_ints({{1, 1, 1}, {1, 1, 1}, {0, 0, 0}});
    case 4: return Mat::from_ints({{0, 1, 0}, {0, 0, 0}, {0, 1, 0}});
    case 5: return Mat::from_ints({{1, 1, 0}, {1, 1, 0}, {0, 0, 0}});
    case 6: return Mat::from_ints({{1, 1, 0}, {0, 0, 0}, {1, 1, 0}});
  }
  throw InputError("representatives are numbered 1..6");
}

SemifreeResolution displayed_resolution(int i) {
  using Rows = std::vector<std::vector<std::string>>;
  Rows rows;
  switch (i) {
    case 1:
      rows = {{},
              {"x2"},
              {"x3"},
              {"0", "x3", "x2"},
              {"x1", "x2", "x3"},
              {"0", "0", "x1", "x2", "x3"},
              {"0", "x1", "0", "x3", "x2"},
              {"0", "0", "0", "x1", "0", "x2", "x3"}};
      break;
    case 2: rows = {{}, {"x2"}, {"x3"}, {"x1", "x2"}, {"0", "x1", "0", "x2"}}; break;
    case 3: rows = {{}, {"x1 - x2"}, {"x3"}, {"x1", "x1 - x2", "x3"}}; break;
    case 4: rows = {{}, {"x2"}, {"x1 - x3"}, {"x1", "x2"}, {"0", "x1", "0", "x2"}}; break;
    case 5: rows = {{}, {"x3"}, {"x1 - x2"}, {"0", "x1 - x2", "x3"}}; break;
    case 6: rows = {{}, {"x2"}, {"x1 - x3"}, {"0", "x1 - x3", "x2"}}; break;
    default: throw InputError("representatives are numbered 1..6");
  }
  return resolution_from_rows(representative_matrix(i), rows, "D" + std::to_string(i));
}

SemifreeResolution representative_resolution(int i) {
  if (i == 1 || i == 6) return displayed_resolution(i);
  SemifreeResolution r = minimal_resolution(DgSpec(representative_matrix(i)));
  r.subcase = "M" + std::to_string(i);
  return r;
}

namespace {

// Coordinates of d_F(a e_j) in F^{i+1} = (+)_l A^{i+1} e_l, a of degree i.
EchelonBasis::Sparse f_image(const DgSpec& spec, const Grid& d, std::size_t j, const SkewElement& a, unsigned i,
                             const BasisIndex& dst) {
  EchelonBasis::Sparse col;
  auto add = [&](std::size_t slot, const SkewElement& u) {
    for (const auto& [mm, c] : u.terms()) col[slot * dst.size() + dst.index(mm)] += c;
  };
  add(j, differential(spec, a));
  Scalar sign = i % 2 ? -1 : 1;
  for (std::size_t l = 0; l < d.size(); ++l)
    if (!d[j][l].is_zero()) add(l, sign * (a * d[j][l]));
  for (auto it = col.begin(); it != col.end();) it = sgn(it->second) == 0 ? col.erase(it) : std::next(it);
  return col;
}

}  // namespace

SemifreeResolution minimal_resolution(const DgSpec& spec, std::size_t max_size) {
  const std::size_t n = spec.n;
  Grid d = zero_grid(1, n);
  BasisIndex b1(n, 1), b2(n, 2);
  SkewElement one = SkewElement::constant(n, 1);
  while (true) {
    const std::size_t sz = d.size();
    Mat dd(sz * b2.size(), sz * b1.size());
    for (std::size_t j = 0; j < sz; ++j)
      for (std::size_t k = 0; k < b1.size(); ++k)
        for (const auto& [r, c] : f_image(spec, d, j, SkewElement::monomial(b1.basis()[k]), 1, b2))
          dd(r, j * b1.size() + k) = c;
    EchelonBasis boundaries;
    for (std::size_t j = 0; j < sz; ++j) boundaries.insert(f_image(spec, d, j, one, 0, b1));
    std::optional<Vec> z;
    for (const auto& v : kernel(dd))
      if (!boundaries.contains(to_sparse(v))) {
        z = v;
        break;
      }
    if (!z) break;
    if (sz == max_size) throw Unsupported("minimal resolution exceeds " + std::to_string(max_size) + " basis elements");
    std::vector<SkewElement> row(sz + 1, SkewElement(n));
    for (std::size_t j = 0; j < sz; ++j) {
      Vec c(b1.size());
      for (std::size_t k = 0; k < b1.size(); ++k) c[k] = (*z)[j * b1.size() + k];
      row[j] = b1.element(c);
    }
    for (auto& r : d) r.push_back(SkewElement(n));
    d.push_back(std::move(row));
  }
  return make(spec.m, std::move(d), "cocycle-killing");
}

VerifyRecord verify_resolution(const DgSpec& spec, const SemifreeResolution& res, unsigned dmax) {
  VerifyRecord rec;
  const std::size_t m = res.size, n = spec.n;
  auto fail = [&](std::string msg) {
    if (rec.failure.empty()) rec.failure = std::move(msg);
  };
  if (res.d.size() != m) throw InputError("resolution grid does not match its size");
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t l = 0; l < m; ++l) {
      const SkewElement& e = res.d[j][l];
      if (e.is_zero()) continue;
      if (e.n() != n) throw InputError("resolution entries live over a different number of variables");
      if (l >= j || e.homogeneous_degree() != 1) {
        rec.minimal = false;
        fail("entry (" + std::to_string(j) + "," + std::to_string(l) + ") = " + e.str() + " is not a degree-1 entry below the diagonal");
      }
    }
  if (!rec.minimal) return rec;

  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t l = 0; l < m; ++l) {
      SkewElement lhs = differential(spec, res.d[j][l]);
      SkewElement rhs(n);
      for (std::size_t k = 0; k < m; ++k) rhs += res.d[j][k] * res.d[k][l];
      if (!(lhs == rhs)) {
        rec.square_zero = false;
        fail("square-zero fails at (" + std::to_string(j) + "," + std::to_string(l) + "): d(entry) = " + lhs.str() +
             ", (d*d) = " + rhs.str());
      }
    }
  if (!rec.square_zero) return rec;

  // rank of the F-differential F^i -> F^{i+1}
  auto f_rank = [&](unsigned i) {
    BasisIndex src(n, i), dst(n, i + 1);
    EchelonBasis cols;
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& mono : src.basis()) cols.insert(f_image(spec, res.d, j, SkewElement::monomial(mono), i, dst));
    return cols.rank();
  };
  std::vector<std::size_t> ranks;
  for (unsigned i = 0; i < dmax; ++i) ranks.push_back(f_rank(i));
  for (unsigned i = 0; i < dmax; ++i) {
    std::size_t dim = m * graded_dim(n, i);
    std::size_t h = dim - ranks[i] - (i ? ranks[i - 1] : 0);
    rec.homology.push_back(h);
    if (h != (i == 0 ? 1u : 0u)) {
      rec.exact = false;
      fail("H^" + std::to_string(i) + "(F) has dimension " + std::to_string(h));
    }
  }
  return rec;
}

FinAlg ext_algebra(const SemifreeResolution& res) {
  const std::size_t m = res.size;
  if (m == 0) throw InputError("empty resolution");
  std::size_t n = 0;
  for (const auto& row : res.d)
    for (const auto& e : row)
      if (!e.is_zero()) n = e.n();
  // coefficient of x_i in d_{jl}
  auto coef = [&](std::size_t j, std::size_t l, std::size_t i) -> Scalar {
    const SkewElement& e = res.d[j][l];
    return e.is_zero() ? Scalar(0) : e.coefficient(SkewMonomial::letter(n, i + 1));
  };
  const std::size_t unknowns = m * m;
  std::vector<Vec> eqs;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t l = 0; l < m; ++l)
      for (std::size_t i = 0; i < n; ++i) {
        Vec row(unknowns);
        for (std::size_t k = 0; k < m; ++k) {
          row[j * m + k] += coef(k, l, i);
          row[k * m + l] -= coef(j, k, i);
        }
        if (!is_zero(row)) eqs.push_back(std::move(row));
      }
  std::vector<Vec> kern;
  if (eqs.empty()) {
    for (std::size_t k = 0; k < unknowns; ++k) {
      Vec v(unknowns);
      v[k] = 1;
      kern.push_back(v);
    }
  } else {
    kern = kernel(Mat::from_rows(eqs));
  }
  Vec id(unknowns);
  for (std::size_t k = 0; k < m; ++k) id[k * m + k] = 1;
  std::vector<Vec> basis = {id};
  EchelonBasis span;
  span.insert(to_sparse(id));
  for (const auto& v : kern)
    if (span.insert(to_sparse(v))) basis.push_back(v);
  if (basis.size() != kern.size()) throw InternalError("identity is not in the commutant");

  const std::size_t dim = basis.size();
  Mat coords = Mat::from_columns(basis, unknowns);
  auto matmul = [&](const Vec& a, const Vec& b) {
    Vec c(unknowns);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) {
        if (sgn(a[i * m + k]) == 0) continue;
        for (std::size_t j = 0; j < m; ++j) c[i * m + j] += a[i * m + k] * b[k * m + j];
      }
    return c;
  };
  std::vector<Scalar> structure(dim * dim * dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      auto sol = solve_linear(coords, matmul(basis[a], basis[b]));
      if (!sol.particular) throw InternalError("commutant is not closed under multiplication");
      for (std::size_t k = 0; k < dim; ++k) structure[(a * dim + b) * dim + k] = (*sol.particular)[k];
    }
  Vec unit(dim);
  unit[0] = 1;
  return make_algebra(dim, unit, structure);
}

}  // namespace skewdg
