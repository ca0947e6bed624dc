#include "skewdg/exact_linalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "skewdg/errors.hpp"

namespace skewdg {

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw InputError("empty rational");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + i, t.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw InputError("malformed rational '" + std::string(text) + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Mat m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_ints(const std::vector<std::vector<long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Mat m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Mat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InputError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Mat::row(std::size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

Vec Mat::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
  Mat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += x * b(k, j);
    }
  return c;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum dimension mismatch");
  Mat c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference dimension mismatch");
  Mat c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols() != v.size()) throw InputError("matrix-vector dimension mismatch");
  Vec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0) out[i] += a(i, j) * v[j];
  return out;
}

std::string to_string(const Mat& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

RrefResult rref(const Mat& a) {
  RrefResult out{a, 0, {}};
  Mat& r = out.reduced;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < r.cols() && lead_row < r.rows(); ++col) {
    std::size_t best = r.rows();
    for (std::size_t i = lead_row; i < r.rows(); ++i) {
      if (sgn(r(i, col)) == 0) continue;
      if (best == r.rows() || mpz_cmpabs(r(i, col).get_num_mpz_t(), r(best, col).get_num_mpz_t()) > 0) best = i;
    }
    if (best == r.rows()) continue;
    if (best != lead_row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(best, j), r(lead_row, j));
    Scalar inv = 1 / r(lead_row, col);
    for (std::size_t j = col; j < r.cols(); ++j) r(lead_row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead_row || sgn(r(i, col)) == 0) continue;
      Scalar f = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j)
        if (sgn(r(lead_row, j)) != 0) r(i, j) -= f * r(lead_row, j);
    }
    out.pivot_columns.push_back(col);
    ++lead_row;
  }
  out.rank = out.pivot_columns.size();
  return out;
}

std::size_t rank(const Mat& a) { return rref(a).rank; }

static std::vector<Vec> kernel_from_rref(const RrefResult& rr, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : rr.pivot_columns)
    if (c < cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < rr.pivot_columns.size(); ++r) {
      std::size_t pc = rr.pivot_columns[r];
      if (pc < cols) v[pc] = -rr.reduced(r, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> kernel(const Mat& a) { return kernel_from_rref(rref(a), a.cols()); }

LinearSolution solve_linear(const Mat& a, const Vec& b) {
  if (b.size() != a.rows()) throw InputError("right-hand side length does not match matrix rows");
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RrefResult rr = rref(aug);
  LinearSolution sol;
  sol.kernel_basis = kernel_from_rref(rr, a.cols());
  if (!rr.pivot_columns.empty() && rr.pivot_columns.back() == a.cols()) return sol;
  Vec x(a.cols());
  for (std::size_t r = 0; r < rr.pivot_columns.size(); ++r) x[rr.pivot_columns[r]] = rr.reduced(r, a.cols());
  sol.particular = std::move(x);
  return sol;
}

bool in_span(const std::vector<Vec>& vectors, const Vec& v) {
  EchelonBasis basis;
  for (const auto& w : vectors) {
    if (w.size() != v.size()) throw InputError("in_span: length mismatch");
    basis.insert(to_sparse(w));
  }
  return basis.contains(to_sparse(v));
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("dot: length mismatch");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

EchelonBasis::Sparse to_sparse(const Vec& v) {
  EchelonBasis::Sparse s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) s.emplace(i, v[i]);
  return s;
}

EchelonBasis::Sparse EchelonBasis::reduce(Sparse v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto p = pivots_.find(it->first);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    Scalar f = it->second;
    std::size_t col = it->first;
    for (const auto& [c, x] : p->second) {
      auto [slot, fresh] = v.try_emplace(c, 0);
      slot->second -= f * x;
      (void)fresh;
    }
    // Pivot rows lead at col, so only columns >= col changed.
    it = v.lower_bound(col);
    while (it != v.end() && sgn(it->second) == 0) it = v.erase(it);
    // Erase any other zeros produced further right lazily.
  }
  for (auto jt = v.begin(); jt != v.end();) jt = sgn(jt->second) == 0 ? v.erase(jt) : std::next(jt);
  return v;
}

bool EchelonBasis::contains(Sparse v) const { return reduce(std::move(v)).empty(); }

bool EchelonBasis::insert(Sparse v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  std::size_t col = v.begin()->first;
  Scalar inv = 1 / v.begin()->second;
  for (auto& [c, x] : v) x *= inv;
  for (auto& [pc, row] : pivots_) {
    auto hit = row.find(col);
    if (hit == row.end()) continue;
    Scalar f = hit->second;
    for (const auto& [c, x] : v) {
      auto [slot, fresh] = row.try_emplace(c, 0);
      slot->second -= f * x;
      (void)fresh;
    }
    for (auto jt = row.begin(); jt != row.end();) jt = sgn(jt->second) == 0 ? row.erase(jt) : std::next(jt);
  }
  pivots_.emplace(col, std::move(v));
  return true;
}

std::size_t sparse_rank(const Mat& a) {
  // Rank of the column space; columns are usually the sparser side here.
  EchelonBasis basis;
  for (std::size_t j = 0; j < a.cols(); ++j) basis.insert(to_sparse(a.column(j)));
  return basis.rank();
}

}  // namespace skewdg
