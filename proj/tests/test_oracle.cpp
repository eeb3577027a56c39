#include <gtest/gtest.h>

#include "onedpp/catalog.hpp"
#include "onedpp/connectivity.hpp"
#include "onedpp/oracle.hpp"
#include "onedpp/onedep.hpp"
#include "support/oracles.hpp"

using namespace onedpp;

TEST(Oracle, CarriesWorkedExample) {
  const auto d = oracle_distribution(ProcessName{CarriesBaseB{2}}, 8);
  EXPECT_EQ(d[Pattern::from_bits("1000100").mask()], Rational(9, 256));
}

TEST(Oracle, EulerianHistogram) {
  const auto d = oracle_distribution(ProcessName{UniformDescents{}}, 4);
  std::vector<Rational> hist(4, Rational(0));
  for (std::size_t m = 0; m < d.size(); ++m) hist[static_cast<std::size_t>(__builtin_popcountll(m))] += d[m];
  EXPECT_EQ(hist, (std::vector<Rational>{Rational(1, 24), Rational(11, 24), Rational(11, 24), Rational(1, 24)}));
}

TEST(Oracle, HorizonOne) {
  for (const char* name : {"carries:b=3", "descents:uniform", "descents:mallows:q=1/3", "descents:alternating"})
    EXPECT_EQ(oracle_distribution(parse_process(name), 1), (std::vector<Rational>{1})) << name;
  EXPECT_EQ(oracle_distribution(ConnectivityPermutations{}, 1), (std::vector<Rational>{1}));
  EXPECT_EQ(oracle_distribution(quaternion_setup(), 1), (std::vector<Rational>{1}));
}

TEST(Oracle, Correlations) {
  const auto rho = oracle_correlations(ProcessName{CarriesBaseB{10}}, 3);
  EXPECT_EQ(rho[0b11], Rational(120, 1000));
  EXPECT_EQ(rho[0], Rational(1));
  EXPECT_EQ(rho[0b01], Rational(45, 100));
}

TEST(Oracle, TypeBSingletons) {
  const OneDepSpec s = build(TypeBDescents{3}, 4);
  const auto rho = oracle_correlations(ProcessName{TypeBDescents{3}}, 4);
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(rho[std::size_t{1} << (i - 1)], correlation(s, {i})) << i;
  EXPECT_EQ(rho[0b100], Rational(1, 2));
}

TEST(Oracle, AgreesWithIndependentDigits) {
  for (int b : {2, 3, 4})
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(oracle_distribution(ProcessName{CarriesBaseB{b}}, n), ref::digit_carries(b, n));
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(oracle_distribution(ProcessName{UniformDescents{}}, n), ref::permutation_descents(n));
}

TEST(Oracle, MatchesDeterminants) {
  struct Case {
    const char* name;
    int max_n;
  };
  for (const Case c : {Case{"carries:b=2", 7}, Case{"carries:b=3", 7}, Case{"carries:b=10", 5},
                       Case{"descents:uniform", 7}, Case{"descents:mallows:q=1/2", 7},
                       Case{"descents:mallows:q=2/3", 6}, Case{"descents:iid:p=1/4,1/4,1/2", 7},
                       Case{"descents:alternating", 7}, Case{"poset:q=1/2:r=2", 5}, Case{"poset:q=1:r=3", 4},
                       Case{"genericpoints:n=3", 6}, Case{"brenti:theta=1/2,1/2:R=11/01", 7},
                       Case{"brenti:theta=1/3,1/3,1/3:R=101/011/001", 6}}) {
    const ProcessName name = parse_process(c.name);
    for (int n = 2; n <= c.max_n; ++n) {
      const OneDepSpec s = build(name, n);
      const auto d = oracle_distribution(name, n);
      EXPECT_EQ(d, pattern_distribution(s)) << c.name << " " << n;
      const auto rho = oracle_correlations(d);
      const DenseKernel k = dense_kernel(s);
      for (std::uint64_t m = 0; m < rho.size(); ++m)
        EXPECT_EQ(rho[m], k.minor(ref::ones_of(m, n))) << c.name << " " << n << " " << m;
    }
  }
  for (int m = 1; m <= 5; ++m) {
    const ProcessName name{TypeBDescents{m}};
    EXPECT_EQ(oracle_distribution(name, m + 1), pattern_distribution(build(name, m + 1))) << m;
  }
}

TEST(Oracle, GroupsMatchTransfer) {
  for (const CentralExtensionSetup& s : {quaternion_setup(), dihedral_setup(), cyclic_setup(3),
                                         elementary_abelian_setup(false)})
    for (int n = 1; n <= 6; ++n)
      EXPECT_EQ(oracle_distribution(s, n), carries_pattern_distribution(s, n).probabilities) << n;
}

TEST(Oracle, ConnectivityMatchesKernel) {
  for (int n = 2; n <= 7; ++n) {
    const auto rho = oracle_correlations(ConnectivityPermutations{}, n);
    const DenseKernel k = connectivity_kernel(n);
    for (std::uint64_t m = 0; m < rho.size(); ++m) EXPECT_EQ(rho[m], k.minor(ref::ones_of(m, n))) << n << " " << m;
  }
}

TEST(Oracle, Budget) {
  EXPECT_THROW(oracle_distribution(ProcessName{CarriesBaseB{10}}, 9, OracleBudget{1000}), BudgetError);
  EXPECT_THROW(oracle_distribution(ProcessName{UniformDescents{}}, 12), BudgetError);
  EXPECT_THROW(oracle_distribution(ProcessName{UniformDescents{}}, 0), ParameterError);
}
