#include <gtest/gtest.h>

#include <random>

#include "onedpp/exact.hpp"
#include "support/oracles.hpp"

using namespace onedpp;

namespace {

RationalMatrix from_grid(const ref::Grid& g) {
  RationalMatrix m(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) m(i, j) = g[i][j];
  return m;
}

LaurentSeries poly(std::vector<long> c, long order) {
  std::vector<Rational> r(c.begin(), c.end());
  return LaurentSeries::polynomial(std::move(r), order);
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("6/8").str(), "3/4");
  EXPECT_EQ(Rational::parse("-4/2").str(), "-2");
  EXPECT_EQ(Rational::parse("17").str(), "17");
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("abc"), Error);
}

TEST(Rational, Helpers) {
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(binomial(17, 9), 24310);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(pow(Rational(1, 3), 3), Rational(1, 27));
  EXPECT_EQ(pow(Rational(2), -2), Rational(1, 4));
  // [3]_q! at q = 1/2 = 1 * 3/2 * 7/4
  EXPECT_EQ(q_factorial(Rational(1, 2), 3), Rational(21, 8));
  EXPECT_EQ(q_factorial(Rational(1), 4), Rational(24));
}

TEST(Determinant, WorkedMatrix) {
  ref::Grid g{{2, 6, 9}, {1, 5, 8}, {0, 1, 4}};
  EXPECT_EQ(det(from_grid(g)), Rational(9));
}

TEST(Determinant, Identity) { EXPECT_EQ(det(RationalMatrix::identity(3)), Rational(1)); }

TEST(Determinant, NonSquareRejected) { EXPECT_THROW(det(RationalMatrix(2, 3)), DimensionError); }

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-2, 2), den(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    ref::Grid g(n, std::vector<Rational>(n));
    for (auto& row : g)
      for (auto& x : row) x = Rational(num(rng), den(rng));
    EXPECT_EQ(det(from_grid(g)), ref::cofactor_det(g)) << "trial " << trial;
  }
}

TEST(Determinant, SingularAndPivoting) {
  ref::Grid g{{0, 1}, {1, 0}};
  EXPECT_EQ(det(from_grid(g)), Rational(-1));
  ref::Grid s{{1, 2}, {2, 4}};
  EXPECT_EQ(det(from_grid(s)), Rational(0));
}

TEST(Matrix, InverseRoundTrip) {
  ref::Grid g{{2, 6, 9}, {1, 5, 8}, {0, 1, 4}};
  const RationalMatrix m = from_grid(g);
  const RationalMatrix p = m * inverse(m);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(p(i, j), Rational(i == j ? 1 : 0));
}

TEST(Series, GeometricInverse) {
  const auto t = series_reciprocal(poly({1, -1}, 5), 5);
  for (long m = 0; m < 5; ++m) EXPECT_EQ(t.coeff(m), Rational(1));
  EXPECT_THROW(t.coeff(5), TruncationError);
}

TEST(Series, InverseOfSquaredGeometric) {
  // (1-z)^{-2} = sum (m+1) z^m
  const auto s = LaurentSeries::generate([](long m) { return Rational(m + 1); }, 4);
  const auto t = series_reciprocal(s, 4);
  EXPECT_EQ(t.coeff(0), Rational(1));
  EXPECT_EQ(t.coeff(1), Rational(-2));
  EXPECT_EQ(t.coeff(2), Rational(1));
  EXPECT_EQ(t.coeff(3), Rational(0));
}

TEST(Series, LaurentInverseOfCarriesDenominator) {
  // 1/(2z - z^2) = z^{-1}/2 + 1/4 + z/8 + z^2/16 + ...
  const auto t = series_reciprocal(poly({0, 2, -1}, 5), 3);
  EXPECT_EQ(t.coeff(-1), Rational(1, 2));
  EXPECT_EQ(t.coeff(0), Rational(1, 4));
  EXPECT_EQ(t.coeff(1), Rational(1, 8));
  EXPECT_EQ(t.coeff(2), Rational(1, 16));
  EXPECT_EQ(t.coeff(-2), Rational(0));
  const auto back = series_multiply(t, poly({0, 2, -1}, 5));
  EXPECT_EQ(back.coeff(0), Rational(1));
  EXPECT_EQ(back.coeff(1), Rational(0));
  EXPECT_EQ(back.coeff(2), Rational(0));
}

TEST(Series, SingularSeries) {
  EXPECT_THROW(series_reciprocal(poly({0, 0, 0}, 3), 3), SingularSeriesError);
}

TEST(Series, Products) {
  const auto p = series_multiply(poly({1, 1}, 4), poly({1, -1}, 4));
  EXPECT_EQ(p.coeff(0), Rational(1));
  EXPECT_EQ(p.coeff(1), Rational(0));
  EXPECT_EQ(p.coeff(2), Rational(-1));
  EXPECT_EQ(p.coeff(3), Rational(0));

  const auto ex = LaurentSeries::generate([](long m) { return Rational(Integer(1), factorial(m)); }, 6);
  const auto emx = ex.negated_variable();
  const auto one = series_multiply(ex, emx);
  EXPECT_EQ(one.coeff(0), Rational(1));
  for (long m = 1; m < 6; ++m) EXPECT_EQ(one.coeff(m), Rational(0)) << m;
}

TEST(Series, TruncationPropagates) {
  // product of series known below 3 and below 5 is known below 3
  const auto p = series_multiply(poly({1, 2}, 3), poly({1, 1}, 5));
  EXPECT_EQ(p.order(), 3);
  EXPECT_THROW(p.coeff(3), TruncationError);
}

TEST(Polynomial, SquarefreeAndSturm) {
  // (x-1)^2 (x+2) x^3 = x^6 - 3x^4 + 2x^3
  const Polynomial p{0, 0, 0, 2, -3, 0, 1};
  const auto f = squarefree_factors(p);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], (Polynomial{2, 1}));
  EXPECT_EQ(f[1], (Polynomial{-1, 1}));
  EXPECT_EQ(f[2], (Polynomial{0, 1}));
  EXPECT_EQ(real_root_count(p), 3);
  EXPECT_EQ(real_root_count(Polynomial{1, 0, 1}), 0);
}

TEST(Polynomial, CharacteristicPolynomial) {
  ref::Grid g{{2, 1}, {1, 2}};
  EXPECT_EQ(characteristic_polynomial(from_grid(g)), (Polynomial{3, -4, 1}));
}
