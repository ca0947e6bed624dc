#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewdg/exact_linalg.hpp"

namespace skewdg {

// b_i b_j = sum_k c[(i*dim + j)*dim + k] b_k
struct FinAlg {
  std::size_t dim = 0;
  Vec unit;
  std::vector<Scalar> structure;

  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return structure[(i * dim + j) * dim + k]; }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return structure[(i * dim + j) * dim + k]; }
  Vec mul(const Vec& x, const Vec& y) const;
  Vec basis_vector(std::size_t i) const;
  bool operator==(const FinAlg& o) const = default;
};

FinAlg make_algebra(std::size_t dim, const Vec& unit, const std::vector<Scalar>& structure);
FinAlg sklyanin_e(const Scalar& lambda, const Scalar& mu, const Scalar& nu);
// k[x]/(x^m) on the monomial basis 1, x, ..., x^{m-1}
FinAlg truncated_polynomial(std::size_t m);
// Structure constants in the basis given by the columns of p (invertible).
FinAlg change_basis(const FinAlg& e, const Mat& p);

bool is_commutative(const FinAlg& e);
// Basis of the radical when e is local with residue field k.
std::optional<std::vector<Vec>> local_radical(const FinAlg& e);
std::size_t socle_dim(const FinAlg& e);
std::vector<std::size_t> radical_filtration(const FinAlg& e);

struct FrobeniusVerdict {
  bool frobenius = false;
  bool symmetric = false;
  std::string method;  // "socle-criterion" or "certificate"
  std::optional<Vec> witness;
  bool decisive = false;
};

// Nonsingular Gram matrix lambda(b_i b_j).
bool gram_nonsingular(const FinAlg& e, const Vec& lambda);
bool kills_commutators(const FinAlg& e, const Vec& lambda);

FrobeniusVerdict frobenius_certificate(const FinAlg& e, unsigned budget, std::uint64_t seed);
FrobeniusVerdict frobenius(const FinAlg& e, unsigned budget = 64, std::uint64_t seed = 0);
std::optional<std::size_t> recognize_truncated(const FinAlg& e);

}  // namespace skewdg
