#include "skewdg/classifier.hpp"

#include "skewdg/errors.hpp"

namespace skewdg {

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::Rank3: return "Rank3";
    case Branch::Rank2Nondeg: return "Rank2Nondeg";
    case Branch::Rank2Degenerate: return "Rank2Degenerate";
    case Branch::Rank1: return "Rank1";
    case Branch::Rank0: return "Rank0";
  }
  return "?";
}

std::string subcase_name(Subcase s) {
  switch (s) {
    case Subcase::S1_1: return "1.1";
    case Subcase::S1_2_1: return "1.2.1";
    case Subcase::S1_2_2: return "1.2.2";
    case Subcase::S1_2_3: return "1.2.3";
    case Subcase::S1_2_4: return "1.2.4";
    case Subcase::S1_3_1: return "1.3.1";
    case Subcase::S1_3_2: return "1.3.2";
  }
  return "?";
}

std::size_t subcase_length(Subcase s) {
  switch (s) {
    case Subcase::S1_1: return 3;
    case Subcase::S1_2_1: return 4;
    case Subcase::S1_2_2: return 5;
    case Subcase::S1_2_3: return 6;
    case Subcase::S1_2_4: return 8;
    case Subcase::S1_3_1: return 4;
    case Subcase::S1_3_2: return 6;
  }
  return 0;
}

std::string CaseLabel::describe() const {
  std::string s = branch_name(branch);
  if (subcase) s += "(" + subcase_name(*subcase) + ")";
  if (rank1) s += "(case " + std::to_string(rank1->cohomology_case) + ")";
  return s;
}

Vec hadamard(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

bool in_b2(const Mat& mt, const Vec& w) { return solve_linear(mt, w).particular.has_value(); }

Vec solve_b2(const Mat& mt, const Vec& w) {
  auto sol = solve_linear(mt, w);
  if (!sol.particular) throw InternalError("expected a coboundary but the system has no solution");
  return *sol.particular;
}

namespace {

Vec lin(const Scalar& a, const Vec& x, const Scalar& b, const Vec& y) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return out;
}

// c with w = c t^2, if any.
std::optional<Scalar> multiple_of(const Vec& w, const Vec& t2) {
  std::size_t k = 0;
  while (k < t2.size() && sgn(t2[k]) == 0) ++k;
  if (k == t2.size()) return std::nullopt;
  Scalar c = w[k] / t2[k];
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != c * t2[i]) return std::nullopt;
  return c;
}

void classify_rank2(const Mat& m, CaseLabel& label) {
  Mat mt = m.transpose();
  Rank2Data d;
  d.s = kernel(m).at(0);
  d.t = kernel(mt).at(0);
  Vec t2 = hadamard(d.t, d.t);
  if (sgn(dot(d.s, t2)) != 0) {
    label.branch = Branch::Rank2Nondeg;
    label.cohomology_case = 2;
    label.rank2 = d;
    return;
  }
  label.branch = Branch::Rank2Degenerate;
  label.cohomology_case = 3;
  d.q = solve_b2(mt, t2);
  Vec qt = hadamard(d.q, d.t);
  if (!in_b2(mt, qt)) {
    label.subcase = Subcase::S1_1;
  } else if (auto c = multiple_of(qt, t2)) {
    d.q = lin(1, d.q, -*c, d.t);
    Vec q2 = hadamard(d.q, d.q);
    if (!in_b2(mt, q2)) {
      label.subcase = Subcase::S1_2_1;
    } else {
      d.u = solve_b2(mt, q2);
      Vec ut = hadamard(*d.u, d.t);
      if (!in_b2(mt, ut)) {
        label.subcase = Subcase::S1_2_2;
      } else {
        d.v = solve_b2(mt, ut);
        Vec c5 = lin(4, hadamard(*d.v, d.t), 2, hadamard(d.q, *d.u));
        label.subcase = in_b2(mt, c5) ? Subcase::S1_2_4 : Subcase::S1_2_3;
      }
    }
  } else {
    d.r = solve_b2(mt, qt);
    Vec c3 = lin(4, hadamard(*d.r, d.t), 1, hadamard(d.q, d.q));
    if (!in_b2(mt, c3)) {
      label.subcase = Subcase::S1_3_1;
    } else {
      label.subcase = Subcase::S1_3_2;
      d.u = solve_b2(mt, c3);
      d.v = solve_b2(mt, lin(1, hadamard(*d.u, d.t), 2, hadamard(*d.r, d.q)));
    }
  }
  label.rank2 = d;
}

void classify_rank1(const Mat& m, CaseLabel& label) {
  std::size_t p = 0;
  while (p < 3 && is_zero(m.row(p))) ++p;
  QplMatrix norm = QplMatrix::identity(3);
  std::swap(norm.perm[0], norm.perm[p]);
  Mat mm = chi(m, norm);
  Rank1Params rp;
  rp.moved_row = p;
  rp.normalizer = norm;
  rp.normalized = mm;
  rp.m11 = mm(0, 0);
  rp.m12 = mm(0, 1);
  rp.m13 = mm(0, 2);
  std::size_t j = 0;
  while (sgn(mm(0, j)) == 0) ++j;
  rp.l1 = mm(1, j) / mm(0, j);
  rp.l2 = mm(2, j) / mm(0, j);
  for (std::size_t c = 0; c < 3; ++c)
    if (mm(1, c) != rp.l1 * mm(0, c) || mm(2, c) != rp.l2 * mm(0, c))
      throw InternalError("rank-1 matrix rows are not proportional to the first row");
  bool eq = sgn(rp.excess()) == 0;
  bool both = sgn(rp.l1) != 0 && sgn(rp.l2) != 0;
  if (!eq)
    rp.cohomology_case = both ? 4 : 5;
  else if (both)
    rp.cohomology_case = 6;
  else if (sgn(rp.l1) != 0)
    rp.cohomology_case = 7;
  else if (sgn(rp.l2) != 0)
    rp.cohomology_case = 8;
  else
    rp.cohomology_case = 9;
  label.branch = Branch::Rank1;
  label.cohomology_case = rp.cohomology_case;
  label.rank1 = rp;
}

}  // namespace

CaseLabel classify(const Mat& m) {
  if (m.rows() != 3 || !m.is_square()) throw InputError("classify expects a 3x3 matrix");
  CaseLabel label;
  label.rank = rank(m);
  switch (label.rank) {
    case 3:
      label.branch = Branch::Rank3;
      label.cohomology_case = 1;
      break;
    case 2:
      classify_rank2(m, label);
      break;
    case 1:
      classify_rank1(m, label);
      break;
    default:
      label.branch = Branch::Rank0;
      break;
  }
  return label;
}

TheoremCVerdict theorem_c(const CaseLabel& label) {
  TheoremCVerdict v;
  switch (label.branch) {
    case Branch::Rank3: v.reason = "rank 3: H(A) = k"; return v;
    case Branch::Rank2Nondeg: v.reason = "rank 2, nondegenerate: H(A) = k[z]"; return v;
    case Branch::Rank2Degenerate: v.reason = "rank 2, degenerate: subcase " + subcase_name(*label.subcase) + ", finite resolution"; return v;
    case Branch::Rank0: v.reason = "M = 0: trivial differential on a CY algebra"; return v;
    case Branch::Rank1: break;
  }
  const Rank1Params& p = *label.rank1;
  bool both = sgn(p.l1) != 0 && sgn(p.l2) != 0;
  Scalar ex = p.excess();
  bool family1 = both && sgn(ex) == 0 && sgn(p.m12 * p.m13) == 0;
  bool family2 = both && sgn(ex) != 0 && 4 * p.m12 * p.m13 * p.l1 * p.l1 * p.l2 * p.l2 == ex * ex;
  if (family1 || family2) {
    v.calabi_yau = false;
    v.homologically_smooth = false;
    v.reason = family1 ? "rank 1, case 6 with m12*m13 = 0: degenerate cup relation"
                       : "rank 1, case 4 with 4*m12*m13*l1^2*l2^2 = (m12*l1^2+m13*l2^2-m11)^2";
  } else {
    v.reason = "rank 1, case " + std::to_string(p.cohomology_case) + ": finite resolution";
  }
  return v;
}

TheoremCVerdict theorem_c(const Mat& m) { return theorem_c(classify(m)); }

}  // namespace skewdg
