#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewdg/exact_linalg.hpp"

namespace skewdg {

// x_1^{a_1} ... x_n^{a_n}, letters ascending.
struct SkewMonomial {
  std::vector<unsigned> exponents;

  SkewMonomial() = default;
  explicit SkewMonomial(std::vector<unsigned> e) : exponents(std::move(e)) {}
  static SkewMonomial one(std::size_t n) { return SkewMonomial(std::vector<unsigned>(n, 0)); }
  // i is 1-based: letter(n, 1) = x1
  static SkewMonomial letter(std::size_t n, std::size_t i);

  std::size_t n() const { return exponents.size(); }
  unsigned degree() const;
  bool operator==(const SkewMonomial& o) const = default;
};

// Basis order: lexicographically larger exponent vectors first, so that
// degree-1 components read x1, x2, x3.
struct BasisOrder {
  bool operator()(const SkewMonomial& a, const SkewMonomial& b) const { return a.exponents > b.exponents; }
};

struct SignedMonomial {
  int sign;
  SkewMonomial monomial;
};

SignedMonomial normalize_word(const std::vector<std::size_t>& letters, std::size_t n);
SignedMonomial mono_mul(const SkewMonomial& a, const SkewMonomial& b);

class SkewElement {
 public:
  using Terms = std::map<SkewMonomial, Scalar, BasisOrder>;

  SkewElement() = default;
  explicit SkewElement(std::size_t n) : n_(n) {}
  static SkewElement constant(std::size_t n, const Scalar& c);
  static SkewElement monomial(const SkewMonomial& m, const Scalar& c = 1);
  static SkewElement letter(std::size_t n, std::size_t i, const Scalar& c = 1);
  // sum_i coeffs[i] x_{i+1}
  static SkewElement linear(const Vec& coeffs);

  std::size_t n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for zero or mixed-degree elements.
  int homogeneous_degree() const;
  Scalar coefficient(const SkewMonomial& m) const;
  SkewElement component(unsigned d) const;

  void add_term(const SkewMonomial& m, const Scalar& c);
  SkewElement& operator+=(const SkewElement& o);
  SkewElement& operator-=(const SkewElement& o);
  SkewElement& operator*=(const Scalar& c);

  friend SkewElement operator+(SkewElement a, const SkewElement& b) { return a += b; }
  friend SkewElement operator-(SkewElement a, const SkewElement& b) { return a -= b; }
  friend SkewElement operator*(SkewElement a, const Scalar& c) { return a *= c; }
  friend SkewElement operator*(const Scalar& c, SkewElement a) { return a *= c; }
  SkewElement operator-() const;
  bool operator==(const SkewElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  std::string str() const;

 private:
  void check_n(const SkewElement& o) const;
  std::size_t n_ = 0;
  Terms terms_;
};

SkewElement elt_mul(const SkewElement& u, const SkewElement& v);
inline SkewElement operator*(const SkewElement& u, const SkewElement& v) { return elt_mul(u, v); }

std::vector<SkewMonomial> graded_basis(std::size_t n, unsigned d);
std::size_t graded_dim(std::size_t n, unsigned d);

// Index of each monomial of degree d within graded_basis(n, d).
class BasisIndex {
 public:
  BasisIndex(std::size_t n, unsigned d);
  const std::vector<SkewMonomial>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  std::size_t index(const SkewMonomial& m) const;
  // Coefficient column of a homogeneous element of this degree.
  Vec coords(const SkewElement& u) const;
  SkewElement element(const Vec& coords) const;

 private:
  std::vector<SkewMonomial> basis_;
  std::map<std::vector<unsigned>, std::size_t> index_;
};

std::string monomial_str(const SkewMonomial& m);
// Grammar: sum of [coef*]x<i>[^e]*... terms; factor order is the word order.
SkewElement parse_element(std::string_view text, std::size_t n);

}  // namespace skewdg
