#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace skewdg {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& s);

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows);
  static Mat from_ints(const std::vector<std::vector<long>>& rows);
  static Mat from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  Mat transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Vec operator*(const Mat& a, const Vec& v);
std::string to_string(const Mat& m);

struct RrefResult {
  Mat reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

RrefResult rref(const Mat& a);
std::size_t rank(const Mat& a);

struct LinearSolution {
  std::optional<Vec> particular;
  std::vector<Vec> kernel_basis;
};

LinearSolution solve_linear(const Mat& a, const Vec& b);
std::vector<Vec> kernel(const Mat& a);
bool in_span(const std::vector<Vec>& vectors, const Vec& v);

bool is_zero(const Vec& v);
Scalar dot(const Vec& a, const Vec& b);

// Sparse echelon basis built one vector at a time; rows are kept reduced
// against each other's pivots so membership tests are a single sweep.
class EchelonBasis {
 public:
  using Sparse = std::map<std::size_t, Scalar>;

  // Returns true when v was independent of the current span.
  bool insert(Sparse v);
  bool contains(Sparse v) const;
  std::size_t rank() const { return pivots_.size(); }
  // Reduced form of v modulo the span.
  Sparse reduce(Sparse v) const;

 private:
  std::map<std::size_t, Sparse> pivots_;
};

EchelonBasis::Sparse to_sparse(const Vec& v);

// Rank of a dense matrix via the sparse echelon builder (faster on the
// boundary matrices, which are mostly zero).
std::size_t sparse_rank(const Mat& a);

}  // namespace skewdg
