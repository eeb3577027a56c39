#include <gtest/gtest.h>

#include "onedpp/catalog.hpp"
#include "onedpp/onedep.hpp"
#include "onedpp/stats.hpp"

using namespace onedpp;

namespace {

std::vector<Rational> pushforward(const std::vector<Rational>& patterns, int sites) {
  std::vector<Rational> out(static_cast<std::size_t>(sites + 1), Rational(0));
  for (std::size_t m = 0; m < patterns.size(); ++m) out[static_cast<std::size_t>(__builtin_popcountll(m))] += patterns[m];
  return out;
}

std::vector<std::pair<ProcessName, int>> catalog_cases() {
  std::vector<std::pair<ProcessName, int>> out;
  for (const char* name : {"carries:b=2", "carries:b=3", "carries:b=10", "descents:uniform", "descents:mallows:q=1/2",
                           "descents:iid:p=1/4,1/4,1/2", "descents:alternating", "poset:q=1/2:r=2",
                           "genericpoints:n=3", "brenti:theta=1/2,1/2:R=11/01"})
    for (int n = 2; n <= 7; ++n) out.emplace_back(parse_process(name), n);
  for (int m = 1; m <= 6; ++m) out.emplace_back(ProcessName{TypeBDescents{m}}, m + 1);
  return out;
}

}  // namespace

TEST(CountPolynomial, EulerianFour) {
  const CountPolynomial c = count_polynomial(dense_kernel(build(UniformDescents{}, 4)));
  ASSERT_EQ(c.degree(), 3);
  const std::vector<long> a{1, 11, 11, 1};
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(c.coefficients[j] * Rational(24), Rational(a[j]));
  EXPECT_EQ(c(Rational(1)), Rational(1));
  EXPECT_EQ(eulerian_numbers(4), (std::vector<Integer>{1, 11, 11, 1}));
}

TEST(CountPolynomial, CarriesNoCarry) {
  const CountPolynomial c = count_polynomial(dense_kernel(build(CarriesBaseB{2}, 4)));
  EXPECT_EQ(c.coefficients[0], Rational(5, 16));
}

TEST(CountPolynomial, PushforwardForEveryModel) {
  for (const auto& [name, n] : catalog_cases()) {
    const OneDepSpec s = build(name, n);
    const CountPolynomial c = count_polynomial(dense_kernel(s));
    EXPECT_EQ(c.coefficients, pushforward(pattern_distribution(s), n - 1)) << format(name) << " " << n;
    const Moments tr = count_moments(dense_kernel(s));
    const Moments direct = distribution_moments(c.coefficients);
    EXPECT_EQ(tr.mean, direct.mean) << format(name) << " " << n;
    EXPECT_EQ(tr.variance, direct.variance) << format(name) << " " << n;
  }
}

TEST(Moments, UniformDescents) {
  for (int n = 1; n <= 9; ++n) {
    const Moments m = count_moments(dense_kernel(build(UniformDescents{}, n + 1)));
    EXPECT_EQ(m.mean, Rational(n, 2));
    EXPECT_EQ(m.variance, Rational(n + 2, 12));
  }
}

TEST(Moments, Carries) {
  for (int b : {2, 3, 10})
    for (int n = 2; n <= 9; ++n) {
      const Rational rb(b);
      const Moments m = count_moments(dense_kernel(build(CarriesBaseB{b}, n)));
      EXPECT_EQ(m.mean, Rational(n - 1) * (Rational(1, 2) - Rational(1) / (Rational(2) * rb)));
      EXPECT_EQ(m.variance, Rational(n + 1, 12) * (Rational(1) - Rational(1) / (rb * rb))) << b << " " << n;
    }
}

TEST(Moments, Mallows) {
  for (const Rational& q : {Rational(1, 2), Rational(2, 3), Rational(1)})
    for (int n = 2; n <= 8; ++n) {
      const Moments m = count_moments(dense_kernel(build(MallowsDescents{q}, n)));
      EXPECT_EQ(m.mean, Rational(n - 1) * q / (q + 1));
      const Rational var = q * ((q * q - q + 1) * Rational(n) - q * q + 3 * q - 1) /
                           ((q * q + q + 1) * (q + 1) * (q + 1));
      EXPECT_EQ(m.variance, var) << q.str() << " " << n;
    }
}

TEST(Support, Fibonacci) {
  std::vector<long> fib{0, 1, 1};
  while (fib.size() < 15) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  for (int n = 2; n <= 12; ++n) {
    const auto p = pattern_distribution(build(CarriesBaseB{2}, n));
    long support = 0;
    for (const auto& x : p) support += x.is_zero() ? 0 : 1;
    EXPECT_EQ(support, fib[static_cast<std::size_t>(n + 1)]) << n;
  }
}

TEST(NormalApprox, BoundHolds) {
  for (const ProcessName& name : {ProcessName{UniformDescents{}}, ProcessName{CarriesBaseB{2}}}) {
    const NormalApproxReport r = normal_approx_check(dense_kernel(build(name, 10)));
    EXPECT_TRUE(r.within_bound) << format(name) << " " << r.sup_distance << " " << r.bound;
    EXPECT_TRUE(r.unimodal);
    EXPECT_LE(r.mode_offset, 1.0);
  }
  const NormalApproxReport b3 = normal_approx_check(dense_kernel(build(CarriesBaseB{3}, 10)));
  EXPECT_GT(b3.sigma, 0);
}

TEST(NormalApprox, NormalCdf) {
  EXPECT_DOUBLE_EQ(normal_cdf(0), 0.5);
  EXPECT_NEAR(normal_cdf(1.96), 0.9750021048517795, 1e-14);
  EXPECT_NEAR(normal_cdf(-3), 0.0013498980316301, 1e-15);
}

TEST(Eigenvalues, CarriesBaseTwoRealNonnegative) {
  for (int n : {6, 10}) {
    const EigenReport r = numeric_eigenvalues(dense_kernel(build(CarriesBaseB{2}, n)));
    EXPECT_TRUE(r.all_real_exact()) << n;
    EXPECT_TRUE(r.all_real(1e-9)) << n;
    EXPECT_LT(r.residual, 1e-9);
    for (const auto& x : r.values) EXPECT_GE(x.real(), -1e-9) << n;
    EXPECT_EQ(r.values.size(), static_cast<std::size_t>(n - 1));
  }
}

TEST(Eigenvalues, UniformDescentsBernoulliRates) {
  const DenseKernel k = dense_kernel(build(UniformDescents{}, 7));
  const EigenReport r = numeric_eigenvalues(k);
  EXPECT_TRUE(r.all_real_exact());
  Rational trace = k.matrix().trace();
  double sum = 0;
  for (const auto& x : r.values) {
    EXPECT_GE(x.real(), -1e-9);
    EXPECT_LE(x.real(), 1 + 1e-9);
    sum += x.real();
  }
  EXPECT_NEAR(sum, trace.to_double(), 1e-9);
}

TEST(Simulation, CarriesBaseTen) {
  const SimulationResult r = simulate_process(CarriesBaseB{10}, 9, 200000, 5);
  const Gate rate = make_gate("rate", r.site_rate(4), 0.45, r.site_rate_se(4));
  EXPECT_TRUE(rate.passed) << rate.z;
  const auto [cov, se] = r.adjacent_covariance(4);
  const Gate c = make_gate("cov", cov, -(1.0 / 12) * (1 - 1.0 / 100), se);
  EXPECT_TRUE(c.passed) << c.z;
}

TEST(Simulation, MallowsPatterns) {
  const Rational q(1, 2);
  const int n = 6;
  const SimulationResult r = simulate_process(MallowsDescents{q}, n, 200000, 17);
  const auto exact = pattern_distribution(build(MallowsDescents{q}, n));
  for (std::uint64_t m = 0; m < exact.size(); ++m) {
    const double p = exact[m].to_double();
    const Gate g = make_gate("pattern", r.pattern_frequency(m), p, std::sqrt(p * (1 - p) / 200000.0));
    EXPECT_TRUE(g.passed) << m << " z=" << g.z;
  }
}

TEST(Simulation, SamplersMatchExactPatterns) {
  for (const char* name : {"descents:iid:p=1/4,1/4,1/2", "descents:alternating", "genericpoints:n=3",
                           "descents:uniform", "carries:b=3"}) {
    const ProcessName model = parse_process(name);
    const int n = 6;
    const SimulationResult r = simulate_process(model, n, 100000, 29);
    const auto exact = pattern_distribution(build(model, n));
    for (std::uint64_t m = 0; m < exact.size(); ++m) {
      const double p = exact[m].to_double();
      const Gate g = make_gate("pattern", r.pattern_frequency(m), p, std::sqrt(p * (1 - p) / 100000.0));
      EXPECT_TRUE(g.passed) << name << " " << m << " z=" << g.z;
    }
  }
}

TEST(Simulation, Reproducible) {
  const SimulationResult a = simulate_process(UniformDescents{}, 8, 1000, 99);
  const SimulationResult b = simulate_process(UniformDescents{}, 8, 1000, 99);
  EXPECT_EQ(a.pattern_counts, b.pattern_counts);
  const SimulationResult c = simulate_process(UniformDescents{}, 8, 1000, 100);
  EXPECT_NE(a.pattern_counts, c.pattern_counts);
  EXPECT_THROW(simulate_process(UniformDescents{}, 8, 0, 1), ParameterError);
  EXPECT_THROW(simulate_process(ProcessName{TypeBDescents{3}}, 4, 10, 1), ParameterError);
}

TEST(UniformSum, SingleTerm) {
  const UniformSumReport r = uniform_sum_check(1, 1000, 1);
  EXPECT_EQ(r.floor_counts, (std::vector<std::uint64_t>{1000}));
  EXPECT_EQ(r.pathwise_mismatches, 0u);
}

TEST(UniformSum, FourTerms) {
  const UniformSumReport r = uniform_sum_check(4, 200000, 8);
  EXPECT_EQ(r.exact, (std::vector<Rational>{Rational(1, 24), Rational(11, 24), Rational(11, 24), Rational(1, 24)}));
  EXPECT_EQ(r.pathwise_mismatches, 0u);
  for (const auto& g : r.gates) EXPECT_TRUE(g.passed) << g.name << " z=" << g.z;
  const UniformSumReport again = uniform_sum_check(4, 200000, 8);
  EXPECT_EQ(again.floor_counts, r.floor_counts);
}
