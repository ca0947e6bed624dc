#include "skewdg/qpl_action.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "skewdg/errors.hpp"

namespace skewdg {

QplMatrix QplMatrix::identity(std::size_t n) {
  QplMatrix c;
  c.perm.resize(n);
  std::iota(c.perm.begin(), c.perm.end(), 0);
  c.scales.assign(n, Scalar(1));
  return c;
}

QplMatrix QplMatrix::from_mat(const Mat& c) {
  if (!is_quasi_permutation(c)) throw InputError("matrix is not quasi-permutation");
  QplMatrix q;
  q.perm.resize(c.rows());
  q.scales.resize(c.rows());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      if (sgn(c(i, j)) != 0) {
        q.perm[i] = j;
        q.scales[i] = c(i, j);
      }
  return q;
}

Mat QplMatrix::to_mat() const {
  Mat c(n(), n());
  for (std::size_t i = 0; i < n(); ++i) c(i, perm[i]) = scales[i];
  return c;
}

QplMatrix QplMatrix::inverse() const {
  QplMatrix q;
  q.perm.resize(n());
  q.scales.resize(n());
  for (std::size_t i = 0; i < n(); ++i) {
    q.perm[perm[i]] = i;
    q.scales[perm[i]] = 1 / scales[i];
  }
  return q;
}

QplMatrix operator*(const QplMatrix& a, const QplMatrix& b) {
  if (a.n() != b.n()) throw InputError("QPL product dimension mismatch");
  QplMatrix c;
  c.perm.resize(a.n());
  c.scales.resize(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) {
    c.perm[i] = b.perm[a.perm[i]];
    c.scales[i] = a.scales[i] * b.scales[a.perm[i]];
  }
  return c;
}

bool is_quasi_permutation(const Mat& c) {
  if (!c.is_square()) return false;
  std::vector<int> col_count(c.cols(), 0);
  for (std::size_t i = 0; i < c.rows(); ++i) {
    int row_count = 0;
    for (std::size_t j = 0; j < c.cols(); ++j)
      if (sgn(c(i, j)) != 0) {
        ++row_count;
        ++col_count[j];
      }
    if (row_count != 1) return false;
  }
  return std::all_of(col_count.begin(), col_count.end(), [](int k) { return k == 1; });
}

Mat chi(const Mat& m, const QplMatrix& c) {
  if (m.rows() != c.n() || !m.is_square()) throw InputError("chi: dimension mismatch");
  // (chi)_{perm i, perm j} = m_ij d_j^2 / d_i
  Mat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(c.perm[i], c.perm[j]) = m(i, j) * c.scales[j] * c.scales[j] / c.scales[i];
  return out;
}

Mat chi(const Mat& m, const Mat& c) { return chi(m, QplMatrix::from_mat(c)); }

namespace {

Scalar power(const Scalar& x, long e) {
  mpz_class num, den;
  unsigned long k = static_cast<unsigned long>(std::labs(e));
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), k);
  Scalar r(num, den);
  r.canonicalize();
  return e < 0 ? Scalar(1 / r) : r;
}

std::optional<Scalar> rational_root(const Scalar& x, long e) {
  if (e < 0) {
    auto r = rational_root(x, -e);
    if (!r) return std::nullopt;
    return Scalar(1 / *r);
  }
  if (e == 1) return x;
  bool neg = sgn(x) < 0;
  if (neg && e % 2 == 0) return std::nullopt;
  mpz_class num = abs(x.get_num()), den = x.get_den();
  mpz_class rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e))) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e))) return std::nullopt;
  Scalar r(neg ? mpz_class(-rn) : rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

ScaleSolution solve_scale_system(const std::vector<std::vector<long>>& rows_in, const Vec& values_in, std::size_t n) {
  std::vector<std::vector<long>> a = rows_in;
  Vec val = values_in;
  std::size_t k = a.size();
  std::vector<std::vector<long>> v(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(val[i], val[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : v) std::swap(r[i], r[j]);
  };
  // row_i -= q row_t  <=>  val_i /= val_t^q
  auto row_op = [&](std::size_t i, std::size_t t, long q) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] -= q * a[t][j];
    val[i] *= power(val[t], -q);
  };
  auto col_op = [&](std::size_t j, std::size_t t, long q) {
    for (std::size_t i = 0; i < k; ++i) a[i][j] -= q * a[i][t];
    for (std::size_t i = 0; i < n; ++i) v[i][j] -= q * v[i][t];
  };

  std::size_t rk = 0;
  for (std::size_t t = 0; t < std::min(k, n); ++t) {
    for (;;) {
      std::size_t bi = k, bj = n;
      for (std::size_t i = t; i < k; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (bi == k || std::labs(a[i][j]) < std::labs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == k) break;
      swap_rows(t, bi);
      swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < k; ++i)
        if (a[i][t] != 0) {
          row_op(i, t, a[i][t] / a[t][t]);
          if (a[i][t] != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (a[t][j] != 0) {
          col_op(j, t, a[t][j] / a[t][t]);
          if (a[t][j] != 0) clean = false;
        }
      if (clean) {
        rk = t + 1;
        break;
      }
    }
    if (rk != t + 1) break;
  }

  ScaleSolution sol;
  sol.free_parameters = n - rk;
  sol.exponent_map = v;
  sol.consistent = true;
  for (std::size_t i = rk; i < k; ++i)
    if (val[i] != 1) sol.consistent = false;
  if (!sol.consistent) return sol;
  Vec e(n, Scalar(1));
  bool rational = true;
  for (std::size_t t = 0; t < rk; ++t) {
    long s = a[t][t];
    auto root = rational_root(val[t], s);
    sol.roots.push_back({s, val[t], root.has_value()});
    if (root)
      e[t] = *root;
    else
      rational = false;
  }
  if (rational) {
    Vec d(n, Scalar(1));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t)
        if (v[i][t] != 0) d[i] *= power(e[t], v[i][t]);
    sol.rational_scales = d;
  }
  return sol;
}

namespace {

struct Constraints {
  bool structural_ok = true;
  std::vector<std::vector<long>> rows;
  Vec values;
  std::vector<std::string> equations;
};

std::string monomial_equation(std::size_t i, std::size_t j, const Scalar& r) {
  std::string lhs = i == j ? "d" + std::to_string(i + 1) + "^-1"
                           : "d" + std::to_string(i + 1) + "*d" + std::to_string(j + 1) + "^-2";
  return lhs + " = " + r.get_str();
}

Constraints build_constraints(const Mat& m, const Mat& m2, const std::vector<std::size_t>& perm) {
  Constraints c;
  std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& a = m(i, j);
      const Scalar& b = m2(perm[i], perm[j]);
      bool za = sgn(a) == 0, zb = sgn(b) == 0;
      if (za && zb) continue;
      if (za != zb) {
        c.structural_ok = false;
        return c;
      }
      std::vector<long> row(n, 0);
      row[i] += 1;
      row[j] -= 2;
      Scalar r = a / b;
      c.rows.push_back(row);
      c.values.push_back(r);
      c.equations.push_back(monomial_equation(i, j, r));
    }
  return c;
}

std::vector<std::string> describe(const std::vector<std::size_t>& perm, const ScaleSolution& s) {
  std::vector<std::string> out;
  out.push_back("permutation " + perm_str(perm));
  for (std::size_t t = 0; t < s.roots.size(); ++t)
    out.push_back("e" + std::to_string(t + 1) + "^" + std::to_string(s.roots[t].exponent) + " = " +
                  s.roots[t].value.get_str() + (s.roots[t].rational ? "" : " (no rational root)"));
  for (std::size_t i = 0; i < s.exponent_map.size(); ++i) {
    std::string line = "d" + std::to_string(i + 1) + " =";
    bool any = false;
    for (std::size_t t = 0; t < s.exponent_map[i].size(); ++t) {
      long x = s.exponent_map[i][t];
      if (!x) continue;
      line += (any ? " * " : " ") + std::string("e") + std::to_string(t + 1);
      if (x != 1) line += "^" + std::to_string(x);
      any = true;
    }
    if (!any) line += " 1";
    out.push_back(line);
  }
  return out;
}

}  // namespace

IsoResult iso_solve(const Mat& m, const Mat& m2) {
  if (!m.is_square() || !(m.rows() == m2.rows() && m2.is_square())) throw InputError("iso: matrices must be square of equal size");
  std::size_t n = m.rows();
  if (n > 3) throw Unsupported("iso search is bounded to n <= 3");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  IsoResult closure;
  bool have_closure = false;
  do {
    Constraints c = build_constraints(m, m2, perm);
    if (!c.structural_ok) continue;
    ScaleSolution s = solve_scale_system(c.rows, c.values, n);
    if (!s.consistent) continue;
    if (s.rational_scales) {
      QplMatrix w{perm, *s.rational_scales};
      if (!(chi(m, w) == m2)) throw InternalError("iso witness failed re-verification for " + perm_str(perm));
      IsoResult res;
      res.status = IsoStatus::Witness;
      res.witness = w;
      res.certificate = {"chi(M, C) = M' verified"};
      return res;
    }
    if (!have_closure) {
      closure.status = IsoStatus::ClosureOnly;
      closure.perm = perm;
      closure.scales = s;
      closure.certificate = describe(perm, s);
      have_closure = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return closure;
}

std::vector<AutRecord> aut_group(const Mat& m) {
  if (!m.is_square()) throw InputError("aut: matrix must be square");
  std::size_t n = m.rows();
  if (n > 3) throw Unsupported("automorphism search is bounded to n <= 3");
  std::vector<AutRecord> out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Constraints c = build_constraints(m, m, perm);
    if (!c.structural_ok) continue;
    ScaleSolution s = solve_scale_system(c.rows, c.values, n);
    if (!s.consistent) continue;
    out.push_back({perm, c.equations, s});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string perm_str(const std::vector<std::size_t>& perm) {
  std::string s = "[";
  for (std::size_t i = 0; i < perm.size(); ++i) s += (i ? "," : "") + std::to_string(perm[i] + 1);
  return s + "]";
}

std::string to_string(const QplMatrix& c) { return to_string(c.to_mat()); }

}  // namespace skewdg
