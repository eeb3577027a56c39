#include <gtest/gtest.h>

#include "onedpp/catalog.hpp"
#include "onedpp/onedep.hpp"
#include "onedpp/symfunc.hpp"

using namespace onedpp;

namespace {

std::vector<Rational> a_values(const OneDepSpec& s, int n) { return run_probabilities(s, n + 1); }

std::vector<Rational> e_values(const OneDepSpec& s, int n) {
  return std::get<StationaryE>(s.form()).e.prefix(n + 1);
}

}  // namespace

TEST(Partition, Validation) {
  EXPECT_THROW(Partition({1, 2}), ParameterError);
  EXPECT_THROW(Partition({2, -1}), ParameterError);
  const Partition p({3, 1});
  EXPECT_EQ(p[1], 3);
  EXPECT_EQ(p[3], 0);
  EXPECT_EQ(p.size(), 4);
  EXPECT_TRUE(p.contains(Partition({2, 1})));
  EXPECT_FALSE(p.contains(Partition({1, 1, 1})));
}

TEST(Ribbon, Shapes) {
  const SkewShape all = ribbon_shape(4, {1, 2, 3});
  EXPECT_EQ(all.outer, Partition({1, 1, 1, 1}));
  EXPECT_EQ(all.inner, Partition({0, 0, 0, 0}));
  const SkewShape none = ribbon_shape(5, {});
  EXPECT_EQ(none.outer, Partition({5}));
  EXPECT_EQ(none.inner, Partition({0}));
  const SkewShape mid = ribbon_shape(8, {1, 5});
  EXPECT_EQ(mid.outer, Partition({6, 6, 3}));
  EXPECT_EQ(mid.inner, Partition({5, 2, 0}));
  EXPECT_TRUE(mid.outer.contains(mid.inner));
  EXPECT_THROW(ribbon_shape(4, {4}), ParameterError);
  EXPECT_THROW(ribbon_shape(4, {0}), ParameterError);
}

TEST(SkewSchur, EmptyShapeIsOne) {
  const std::vector<Rational> e{1, 5, 7};
  EXPECT_EQ(skew_schur_specialized(Partition({3, 2}), Partition({3, 2}), e), Rational(1));
  EXPECT_THROW(skew_schur_specialized(Partition({2}), Partition({3}), e), ParameterError);
  EXPECT_THROW(skew_schur_specialized(Partition({4}), Partition({0}), e), TruncationError);
}

TEST(SkewSchur, FourByFourToeplitz) {
  const OneDepSpec s = build(CarriesBaseB{3}, 4);
  const auto a = a_values(s, 4);
  RationalMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const long r = 1 - static_cast<long>(i) + static_cast<long>(j);
      if (r >= 0) m(i, j) = a[static_cast<std::size_t>(r)];
    }
  const Rational jt = skew_schur_specialized(ribbon_shape(4, {1, 2, 3}), a);
  EXPECT_EQ(jt, det(m));
  EXPECT_EQ(jt, pattern_probability(s, Pattern::from_mask(4, 0)));
}

TEST(SkewSchur, PatternProbabilitiesFromRunProbabilities) {
  for (int n = 2; n <= 6; ++n) {
    const OneDepSpec s = build(CarriesBaseB{3}, n);
    const auto a = a_values(s, n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) {
      const Pattern t = Pattern::from_mask(n, m);
      EXPECT_EQ(skew_schur_specialized(ribbon_shape(n, t.zeros()), a), pattern_probability(s, t)) << n << " " << m;
    }
  }
}

TEST(SkewSchur, EFormNormalization) {
  for (const ProcessName& name : {ProcessName{CarriesBaseB{3}}, ProcessName{UniformDescents{}},
                                  ProcessName{MallowsDescents{Rational(1, 2)}}})
    for (int n = 2; n <= 6; ++n) {
      const OneDepSpec s = build(name, n);
      const auto e = e_values(s, n);
      const Rational scale = pow(e[1], n);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) {
        const Pattern t = Pattern::from_mask(n, m);
        EXPECT_EQ(skew_schur_specialized(ribbon_shape(n, t.ones()), e) / scale, pattern_probability(s, t))
            << format(name) << " " << n << " " << m;
      }
    }
}

TEST(SkewSchur, ReversalInvariance) {
  for (const ProcessName& name : {ProcessName{CarriesBaseB{2}}, ProcessName{CarriesBaseB{3}},
                                  ProcessName{MallowsDescents{Rational(1, 2)}}})
    for (int n = 2; n <= 6; ++n) {
      const auto a = a_values(build(name, n), n);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) {
        const Pattern t = Pattern::from_mask(n, m);
        EXPECT_EQ(skew_schur_specialized(ribbon_shape(n, t.zeros()), a),
                  skew_schur_specialized(ribbon_shape(n, t.reversed().zeros()), a))
            << format(name) << " " << n << " " << m;
      }
    }
}

TEST(SkewSchur, AllSitesOccupied) {
  for (const ProcessName& name : {ProcessName{CarriesBaseB{2}}, ProcessName{CarriesBaseB{3}},
                                  ProcessName{UniformDescents{}}})
    for (int n = 2; n <= 8; ++n) {
      const OneDepSpec s = build(name, n);
      const auto e = e_values(s, n);
      const auto ehat = LaurentSeries::polynomial(e, n + 1).negated_variable();
      const Rational coefficient = series_reciprocal(ehat, n + 1).coeff(n);
      const Pattern full = Pattern::from_mask(n, (std::uint64_t{1} << (n - 1)) - 1);
      EXPECT_EQ(coefficient / pow(e[1], n), pattern_probability(s, full)) << format(name) << " " << n;
    }
}

TEST(SymmetricPolys, TwoHalves) {
  const std::vector<Rational> p{Rational(1, 2), Rational(1, 2)};
  const SymmetricValues v = symmetric_polys(p, 4);
  EXPECT_EQ(v.elementary[1], Rational(1));
  EXPECT_EQ(v.complete[1], Rational(1));
  EXPECT_EQ(v.elementary[2], Rational(1, 4));
  EXPECT_EQ(v.complete[2], Rational(3, 4));
  EXPECT_EQ(v.elementary[3], Rational(0));
  EXPECT_EQ(v.complete[3], Rational(1, 2));
}

TEST(SymmetricPolys, GeneratingFunctionsAreInverse) {
  const std::vector<Rational> p{Rational(1, 6), Rational(1, 3), Rational(1, 2)};
  const int d = 8;
  const SymmetricValues v = symmetric_polys(p, d);
  for (int m = 0; m <= d; ++m) {
    Rational c(0);
    for (int r = 0; r <= m; ++r) {
      const Rational sign = (m - r) % 2 == 0 ? Rational(1) : Rational(-1);
      c += v.complete[static_cast<std::size_t>(r)] * sign * v.elementary[static_cast<std::size_t>(m - r)];
    }
    EXPECT_EQ(c, Rational(m == 0 ? 1 : 0)) << m;
  }
}
