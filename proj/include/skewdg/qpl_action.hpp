#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skewdg/exact_linalg.hpp"

namespace skewdg {

// Entry (i, perm[i]) equals scales[i]; all other entries vanish.
struct QplMatrix {
  std::vector<std::size_t> perm;
  Vec scales;

  static QplMatrix identity(std::size_t n);
  static QplMatrix from_mat(const Mat& c);
  std::size_t n() const { return perm.size(); }
  Mat to_mat() const;
  QplMatrix inverse() const;
  bool operator==(const QplMatrix& o) const = default;
};

QplMatrix operator*(const QplMatrix& a, const QplMatrix& b);

bool is_quasi_permutation(const Mat& c);

// C^{-1} M (c_ij^2)
Mat chi(const Mat& m, const QplMatrix& c);
Mat chi(const Mat& m, const Mat& c);

// e^exponent = value, e a fresh unknown of the diagonalized torus.
struct RootRequirement {
  long exponent;
  Scalar value;
  bool rational;
};

struct ScaleSolution {
  bool consistent = false;           // solvable over the algebraic closure
  std::size_t free_parameters = 0;   // dimension of the solution torus
  std::vector<RootRequirement> roots;
  // d_i = prod_k e_k^{exponent_map[i][k]}
  std::vector<std::vector<long>> exponent_map;
  std::optional<Vec> rational_scales;
};

// Solve prod_j d_j^{rows[c][j]} = values[c] over the torus.
ScaleSolution solve_scale_system(const std::vector<std::vector<long>>& rows, const Vec& values, std::size_t n);

enum class IsoStatus { NotIsomorphic, Witness, ClosureOnly };

struct IsoResult {
  IsoStatus status = IsoStatus::NotIsomorphic;
  std::optional<QplMatrix> witness;
  std::vector<std::size_t> perm;  // for ClosureOnly
  ScaleSolution scales;           // for ClosureOnly
  std::vector<std::string> certificate;
};

IsoResult iso_solve(const Mat& m, const Mat& m2);

struct AutRecord {
  std::vector<std::size_t> perm;
  std::vector<std::string> equations;
  ScaleSolution scales;
};

std::vector<AutRecord> aut_group(const Mat& m);

std::string perm_str(const std::vector<std::size_t>& perm);
std::string to_string(const QplMatrix& c);

}  // namespace skewdg
