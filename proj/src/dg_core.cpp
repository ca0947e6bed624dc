#include "skewdg/dg_core.hpp"

#include <random>

#include "skewdg/errors.hpp"

namespace skewdg {

DgSpec::DgSpec(Mat matrix) : n(matrix.rows()), m(std::move(matrix)) {
  if (!m.is_square()) throw InputError("coefficient matrix must be square");
  if (n == 0) throw InputError("n must be positive");
}

SkewElement differential(const DgSpec& spec, const SkewMonomial& a) {
  if (a.n() != spec.n) throw InputError("element over a different n than the spec");
  SkewElement out(spec.n);
  unsigned prefix = 0;
  for (std::size_t i = 0; i < spec.n; ++i) {
    unsigned ai = a.exponents[i];
    if (ai % 2 == 1) {
      Scalar sign = prefix % 2 ? -1 : 1;
      for (std::size_t j = 0; j < spec.n; ++j) {
        const Scalar& mij = spec.m(i, j);
        if (sgn(mij) == 0) continue;
        SkewMonomial b = a;
        --b.exponents[i];
        b.exponents[j] += 2;
        out.add_term(b, sign * mij);
      }
    }
    prefix += ai;
  }
  return out;
}

SkewElement differential(const DgSpec& spec, const SkewElement& u) {
  if (u.n() != spec.n) throw InputError("element over a different n than the spec");
  SkewElement out(spec.n);
  for (const auto& [a, c] : u.terms()) out += differential(spec, a) * c;
  return out;
}

Mat boundary_matrix(const DgSpec& spec, unsigned d) {
  BasisIndex src(spec.n, d), dst(spec.n, d + 1);
  Mat b(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    SkewElement img = differential(spec, src.basis()[j]);
    for (const auto& [m, c] : img.terms()) b(dst.index(m), j) = c;
  }
  return b;
}

std::vector<SkewElement> h1_basis(const DgSpec& spec) {
  std::vector<SkewElement> out;
  for (const auto& v : kernel(spec.m.transpose())) out.push_back(SkewElement::linear(v));
  return out;
}

std::vector<std::size_t> cohomology_dims(const DgSpec& spec, unsigned dmax) {
  std::vector<std::size_t> ranks(dmax + 1);
  for (unsigned d = 0; d <= dmax; ++d) ranks[d] = sparse_rank(boundary_matrix(spec, d));
  std::vector<std::size_t> dims(dmax + 1);
  for (unsigned d = 0; d <= dmax; ++d) {
    std::size_t in = d == 0 ? 0 : ranks[d - 1];
    dims[d] = graded_dim(spec.n, d) - ranks[d] - in;
  }
  return dims;
}

CohomologyReport cohomology(const DgSpec& spec, unsigned dmax) {
  if (dmax < 2) throw InputError("cohomology needs dmax >= 2");
  CohomologyReport rep;
  rep.boundary_ranks.resize(dmax + 1);
  for (unsigned d = 0; d <= dmax; ++d) rep.boundary_ranks[d] = sparse_rank(boundary_matrix(spec, d));
  rep.dims.resize(dmax + 1);
  for (unsigned d = 0; d <= dmax; ++d) {
    std::size_t in = d == 0 ? 0 : rep.boundary_ranks[d - 1];
    rep.dims[d] = graded_dim(spec.n, d) - rep.boundary_ranks[d] - in;
  }
  rep.h1_basis = h1_basis(spec);

  BasisIndex a2(spec.n, 2);
  Mat b1 = boundary_matrix(spec, 1);
  EchelonBasis span;
  for (std::size_t j = 0; j < b1.cols(); ++j) {
    Vec col = b1.column(j);
    if (span.insert(to_sparse(col))) rep.h2.coboundary_basis.push_back(a2.element(col));
  }
  for (const auto& z : kernel(boundary_matrix(spec, 2)))
    if (span.insert(to_sparse(z))) rep.h2.cocycle_reps.push_back(a2.element(z));
  return rep;
}

CupKernel cup_kernel(const DgSpec& spec) {
  CupKernel ck;
  ck.h1_basis = h1_basis(spec);
  ck.h1_dim = ck.h1_basis.size();
  std::size_t h = ck.h1_dim;
  BasisIndex a2(spec.n, 2);
  Mat b1 = boundary_matrix(spec, 1);
  std::size_t hh = h * h;
  // Columns: products y_a y_b, then coboundaries; kernel projects to relations.
  Mat sys(a2.size(), hh + b1.cols());
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t b = 0; b < h; ++b) {
      Vec c = a2.coords(elt_mul(ck.h1_basis[a], ck.h1_basis[b]));
      for (std::size_t i = 0; i < c.size(); ++i) sys(i, a * h + b) = c[i];
    }
  for (std::size_t j = 0; j < b1.cols(); ++j)
    for (std::size_t i = 0; i < b1.rows(); ++i) sys(i, hh + j) = b1(i, j);
  std::vector<Vec> projected;
  for (const auto& v : kernel(sys)) {
    Vec p(v.begin(), v.begin() + static_cast<long>(hh));
    if (!is_zero(p)) projected.push_back(std::move(p));
  }
  if (!projected.empty()) {
    RrefResult rr = rref(Mat::from_rows(projected));
    for (std::size_t r = 0; r < rr.rank; ++r) ck.relations.push_back(rr.reduced.row(r));
  }
  std::size_t image = hh - ck.relations.size();
  std::size_t h2 = a2.size() - sparse_rank(boundary_matrix(spec, 2)) - sparse_rank(b1);
  if (image > h2) throw InternalError("cup product image exceeds dim H^2");
  ck.new_h2_generators = h2 - image;
  return ck;
}

ProbeResult cy_probe(const DgSpec& spec) {
  ProbeResult pr;
  if (spec.m.is_zero()) {
    pr.branch = "rank-0";
    pr.h1_dim = spec.n;
    return pr;
  }
  pr.h1_dim = spec.n - rank(spec.m);
  if (pr.h1_dim == 0) {
    pr.branch = "H=k";
    return pr;
  }
  if (pr.h1_dim != 2) {
    pr.branch = "h1-dim-" + std::to_string(pr.h1_dim);
    return pr;
  }
  CupKernel ck = cup_kernel(spec);
  pr.relation_count = ck.relations.size();
  if (ck.relations.size() != 1) {
    pr.branch = "relations-" + std::to_string(ck.relations.size());
    return pr;
  }
  const Vec& r = ck.relations[0];
  if (r[1] != r[2])
    throw InternalError("single cup relation is not symmetric: y1y2 coefficient " + r[1].get_str() +
                        " vs y2y1 coefficient " + r[2].get_str());
  pr.relation = Vec{r[0], r[3], r[1]};
  if (r[0] * r[3] - r[1] * r[1] == 0) {
    pr.verdict = ProbeVerdict::NotSmooth;
    pr.branch = "degenerate-relation";
  } else {
    pr.branch = "nondegenerate-relation";
  }
  return pr;
}

DifferentialCheck check_differential(const DgSpec& spec, unsigned dmax, std::uint64_t seed, unsigned samples) {
  DifferentialCheck out;
  for (unsigned d = 0; d + 1 <= dmax; ++d)
    for (const auto& a : graded_basis(spec.n, d)) {
      SkewElement dd = differential(spec, differential(spec, a));
      if (!dd.is_zero()) {
        out.square_zero = false;
        out.failure = "d^2(" + monomial_str(a) + ") = " + dd.str();
        return out;
      }
    }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<unsigned> deg(0, std::min(dmax, 4u));
  auto random_element = [&](unsigned d) {
    SkewElement e(spec.n);
    for (const auto& m : graded_basis(spec.n, d)) e.add_term(m, coef(rng));
    return e;
  };
  for (unsigned s = 0; s < samples; ++s) {
    unsigned du = deg(rng), dv = deg(rng);
    SkewElement u = random_element(du), v = random_element(dv);
    SkewElement lhs = differential(spec, elt_mul(u, v));
    SkewElement rhs = elt_mul(differential(spec, u), v);
    SkewElement tail = elt_mul(u, differential(spec, v));
    if (du % 2) tail *= Scalar(-1);
    rhs += tail;
    if (!(lhs == rhs)) {
      out.leibniz = false;
      out.failure = "Leibniz fails for u = " + u.str() + ", v = " + v.str();
      return out;
    }
  }
  return out;
}

}  // namespace skewdg
