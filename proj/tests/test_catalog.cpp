#include <gtest/gtest.h>

#include "onedpp/catalog.hpp"
#include "onedpp/onedep.hpp"
#include "support/oracles.hpp"

using namespace onedpp;

namespace {

std::vector<Rational> e_prefix(const OneDepSpec& s, long count) {
  return std::get<StationaryE>(s.form()).e.prefix(count);
}

PositionSet block(int from, int size) {
  PositionSet out;
  for (int i = 0; i < size; ++i) out.push_back(from + i);
  return out;
}

}  // namespace

TEST(Catalog, CarriesWeights) {
  const auto e = e_prefix(build(CarriesBaseB{3}, 6), 5);
  EXPECT_EQ(e, (std::vector<Rational>{1, 3, 6, 10, 15}));
  EXPECT_EQ(correlation(build(CarriesBaseB{10}, 9), {4}), Rational(45, 100));
}

TEST(Catalog, CarriesRunProbabilities) {
  // P(no carry in the first n-1 places) = C(n+b-1, b-1) / b^n
  for (int b : {2, 3, 10})
    for (int n = 2; n <= 9; ++n) {
      const Pattern zero = Pattern::from_mask(n, 0);
      EXPECT_EQ(pattern_probability(build(CarriesBaseB{b}, n), zero),
                Rational(binomial(n + b - 1, b - 1)) / pow(Rational(b), n));
    }
}

TEST(Catalog, UniformWeights) {
  const auto e = e_prefix(build(UniformDescents{}, 6), 5);
  EXPECT_EQ(e, (std::vector<Rational>{1, 1, Rational(1, 2), Rational(1, 6), Rational(1, 24)}));
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(pattern_distribution(build(UniformDescents{}, n)), ref::permutation_descents(n));
}

TEST(Catalog, MallowsCorrelations) {
  for (const Rational& q : {Rational(1, 2), Rational(1, 3), Rational(1)}) {
    const OneDepSpec s = build(MallowsDescents{q}, 8);
    EXPECT_EQ(correlation(s, {3}), q / (q + 1));
    for (int k = 1; k <= 5; ++k)
      EXPECT_EQ(correlation(s, block(2, k)), pow(q, k * (k + 1) / 2) / q_factorial(q, k + 1)) << k;
  }
  EXPECT_EQ(pattern_distribution(build(MallowsDescents{Rational(1)}, 6)), ref::permutation_descents(6));
}

TEST(Catalog, IidTrials) {
  const std::vector<Rational> p{Rational(1, 2), Rational(1, 4), Rational(1, 4)};
  const OneDepSpec s = build(IidTrials{p}, 7);
  Rational s2(0), s3(0);
  for (const auto& x : p) {
    s2 += x * x;
    s3 += x * x * x;
  }
  EXPECT_EQ(correlation(s, {2}), Rational(1, 2) - s2 / 2);
  EXPECT_EQ(correlation(s, {2, 3}), Rational(1, 6) - s2 / 2 + s3 / 3);
  const SymmetricValues sym = symmetric_polys(p, 6);
  for (int i = 1; i <= 4; ++i)
    EXPECT_EQ(correlation(s, block(1, i)), sym.elementary[static_cast<std::size_t>(i + 1)]) << i;
}

TEST(Catalog, IidMatchesEnumeration) {
  // descents of three i.i.d. letters, enumerated by hand
  const std::vector<Rational> p{Rational(1, 2), Rational(1, 4), Rational(1, 4)};
  const int n = 4;
  std::vector<Rational> truth(8, Rational(0));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          const std::size_t m = (a > b ? 1U : 0U) | (b > c ? 2U : 0U) | (c > d ? 4U : 0U);
          truth[m] += p[static_cast<std::size_t>(a)] * p[static_cast<std::size_t>(b)] *
                      p[static_cast<std::size_t>(c)] * p[static_cast<std::size_t>(d)];
        }
  EXPECT_EQ(pattern_distribution(build(IidTrials{p}, n)), truth);
}

TEST(Catalog, EulerNumbers) {
  EXPECT_EQ(euler_numbers(8), (std::vector<Rational>{1, 1, 1, 2, 5, 16, 61, 272}));
  EXPECT_EQ(euler_numbers(1), (std::vector<Rational>{1}));
  const auto e = e_prefix(build(AlternatingDescents{}, 6), 6);
  EXPECT_EQ(e[5], Rational(16, 120));
}

TEST(Catalog, BernoulliKernel) {
  const StationaryKernel k = bernoulli_kernel(6);
  EXPECT_EQ(k(-1), Rational(-1));
  EXPECT_EQ(k(0), Rational(1, 2));
  EXPECT_EQ(k(1), Rational(-1, 12));
  EXPECT_EQ(k(2), Rational(0));
  EXPECT_EQ(k(3), Rational(1, 720));
  EXPECT_EQ(k(4), Rational(0));
  // same minors as the descent kernel
  const DenseKernel a = materialize(k, 1, 5);
  const DenseKernel b = dense_kernel(build(UniformDescents{}, 6));
  for (std::uint64_t m = 0; m < 32; ++m) EXPECT_EQ(a.minor(ref::ones_of(m, 6)), b.minor(ref::ones_of(m, 6)));
}

TEST(Catalog, PosetUnionAtQOne) {
  // r independent uniform permutations: e(j) = 1/j!^r
  const auto e = e_prefix(build(BinomialPosetUnion{Rational(1), 2}, 5), 5);
  EXPECT_EQ(e, (std::vector<Rational>{1, 1, Rational(1, 4), Rational(1, 36), Rational(1, 576)}));
}

TEST(Catalog, BrentiWeakOrderIsIid) {
  const std::vector<Rational> p{Rational(1, 3), Rational(1, 6), Rational(1, 2)};
  const BrentiRelation r{weak_order_relation(3), p};
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(pattern_distribution(build(r, n)), pattern_distribution(build(IidTrials{p}, n)));
}

TEST(Catalog, GenericPointsRunProbabilities) {
  const int n = 3;
  const OneDepSpec s = build(GenericPoints{n}, 7);
  const auto a = run_probabilities(s, 8);
  EXPECT_EQ(a[0], Rational(1));
  EXPECT_EQ(a[1], Rational(1));
  for (long i = 2; i < 8; ++i) EXPECT_EQ(a[static_cast<std::size_t>(i)], Rational(2 * n) / pow(Rational(n + 1), i));
}

TEST(Catalog, TypeBTable) {
  const RationalMatrix e = type_b_table(3);
  EXPECT_EQ(e.rows(), 5u);
  EXPECT_EQ(e(0, 3), Rational(1, 6));
  EXPECT_EQ(e(0, 4), Rational(1, 48));
  EXPECT_EQ(e(2, 4), Rational(1, 2));
  const OneDepSpec s = build(TypeBDescents{3}, 4);
  EXPECT_EQ(s.horizon(), 4);
  EXPECT_THROW(build(TypeBDescents{3}, 5), ParameterError);
  // a descent at n happens iff sigma(n) < 0
  EXPECT_EQ(correlation(s, {3}), Rational(1, 2));
}

TEST(Catalog, LargeBaseApproachesDescents) {
  const int n = 6;
  const auto limit = pattern_distribution(build(UniformDescents{}, n));
  Rational previous_gap(1);
  for (int b : {10, 100, 1000}) {
    for (long a = 1; a <= 5; ++a) {
      const Rational w = Rational(binomial(a + b - 1, b - 1)) / pow(Rational(b), a);
      EXPECT_LT(abs(w - Rational(Integer(1), factorial(a))), Rational(a * a, static_cast<long>(b)));
    }
    const auto d = pattern_distribution(build(CarriesBaseB{b}, n));
    Rational gap(0);
    for (std::size_t m = 0; m < d.size(); ++m) gap = std::max(gap, abs(d[m] - limit[m]));
    EXPECT_LT(gap, previous_gap);
    previous_gap = gap;
  }
  EXPECT_LT(previous_gap, Rational(1, 100));
}

TEST(Catalog, ParseAndFormat) {
  for (const char* name : {"carries:b=10", "descents:uniform", "descents:mallows:q=1/2", "descents:iid:p=1/4,1/4,1/2",
                           "descents:alternating", "descents:typeB:n=5", "poset:q=1:r=2", "genericpoints:n=3",
                           "brenti:theta=1/2,1/2:R=11/01"})
    EXPECT_EQ(format(parse_process(name)), name);
}

TEST(Catalog, RejectsBadParameters) {
  EXPECT_THROW(parse_process("carries:b=1"), ParameterError);
  EXPECT_THROW(parse_process("carries:c=3"), ParameterError);
  EXPECT_THROW(parse_process("descents:iid:p=1/2,1/4"), ParameterError);
  EXPECT_THROW(parse_process("descents:mallows:q=0"), ParameterError);
  EXPECT_THROW(parse_process("descents:mallows:q=-1"), ParameterError);
  EXPECT_THROW(parse_process("descents:mallows:q=2"), ParameterError);
  EXPECT_THROW(parse_process("poset:q=1:r=0"), ParameterError);
  EXPECT_THROW(parse_process("nothing"), ParameterError);
  EXPECT_THROW(parse_process("brenti:theta=1/2,1/2:R=1/01"), ParameterError);
}

TEST(Catalog, UniformLettersAreCarries) {
  for (int b : {2, 3, 5}) {
    const std::vector<Rational> p(static_cast<std::size_t>(b), Rational(1, b));
    for (int n = 2; n <= 6; ++n)
      EXPECT_EQ(pattern_distribution(build(IidTrials{p}, n)), pattern_distribution(build(CarriesBaseB{b}, n))) << b;
  }
}

TEST(Catalog, GenericPointsOneIsCoinTossing) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& x : pattern_distribution(build(GenericPoints{1}, n))) EXPECT_EQ(x, pow(Rational(1, 2), n - 1));
}
