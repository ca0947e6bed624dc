#include <gtest/gtest.h>

#include <random>

#include "skewdg/errors.hpp"
#include "skewdg/skew_algebra.hpp"

using namespace skewdg;

namespace {

SkewElement x(std::size_t n, std::size_t i) { return SkewElement::letter(n, i); }

SkewElement random_element(std::mt19937_64& rng, std::size_t n, unsigned deg) {
  std::uniform_int_distribution<long> c(-3, 3);
  SkewElement u(n);
  for (const auto& m : graded_basis(n, deg))
    if (long v = c(rng)) u.add_term(m, v);
  return u;
}

}  // namespace

TEST(NormalizeWord, Examples) {
  SignedMonomial a = normalize_word({2, 1}, 3);
  EXPECT_EQ(a.sign, -1);
  EXPECT_EQ(a.monomial.exponents, (std::vector<unsigned>{1, 1, 0}));
  SignedMonomial b = normalize_word({1, 2, 1}, 3);
  EXPECT_EQ(b.sign, -1);
  EXPECT_EQ(b.monomial.exponents, (std::vector<unsigned>{2, 1, 0}));
  SignedMonomial c = normalize_word({3, 2, 1}, 3);
  EXPECT_EQ(c.sign, -1);
  EXPECT_EQ(c.monomial.exponents, (std::vector<unsigned>{1, 1, 1}));
}

TEST(MonoMul, Examples) {
  SignedMonomial p = mono_mul(SkewMonomial::letter(3, 2), SkewMonomial::letter(3, 1));
  EXPECT_EQ(p.sign, -1);
  EXPECT_EQ(p.monomial.exponents, (std::vector<unsigned>{1, 1, 0}));
  SignedMonomial q = mono_mul(SkewMonomial({1, 1, 0}), SkewMonomial({1, 0, 1}));
  EXPECT_EQ(q.sign, -1);
  EXPECT_EQ(q.monomial.exponents, (std::vector<unsigned>{2, 1, 1}));
}

TEST(EltMul, DefiningRelation) {
  EXPECT_TRUE((x(3, 1) * x(3, 2) + x(3, 2) * x(3, 1)).is_zero());
  EXPECT_FALSE((x(3, 1) * x(3, 1)).is_zero());
}

TEST(EltMul, SquaresAreCentral) {
  SkewElement sq = x(3, 1) * x(3, 1);
  EXPECT_TRUE((sq * x(3, 2) - x(3, 2) * sq).is_zero());
}

TEST(EltMul, CorrectionTermExpansion) {
  for (long l1 : {-2, 1, 3})
    for (long l2 : {-1, 2}) {
      SkewElement y1 = Scalar(l1) * x(3, 1) - x(3, 2), y2 = Scalar(l2) * x(3, 1) - x(3, 3);
      SkewElement lhs = y1 * y2 + y2 * y1;
      EXPECT_EQ(lhs, Scalar(2 * l1 * l2) * (x(3, 1) * x(3, 1)));
    }
}

TEST(GradedBasis, Counts) {
  auto b = graded_basis(3, 1);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(monomial_str(b[0]), "x1");
  EXPECT_EQ(monomial_str(b[2]), "x3");
  EXPECT_EQ(graded_dim(3, 2), 6u);
  EXPECT_EQ(graded_dim(2, 5), 6u);
  EXPECT_EQ(graded_dim(4, 3), 20u);
}

TEST(Property, Associativity) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 2 + it % 3;
    SkewElement a = random_element(rng, n, 1 + it % 2), b = random_element(rng, n, 1), c = random_element(rng, n, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Parse, RoundTrip) {
  SkewElement u = parse_element("2*x1^2*x3 - x2*x1 + 1/3*x3", 3);
  EXPECT_EQ(parse_element(u.str(), 3), u);
  EXPECT_EQ(parse_element("x2*x1", 3), -(x(3, 1) * x(3, 2)));
  EXPECT_THROW(parse_element("x4", 3), InputError);
  EXPECT_THROW(SkewElement::letter(3, 0), InputError);
}

TEST(BasisIndex, CoordsRoundTrip) {
  BasisIndex idx(3, 2);
  SkewElement u = parse_element("x1^2 - 3*x2*x3", 3);
  EXPECT_EQ(idx.element(idx.coords(u)), u);
}
