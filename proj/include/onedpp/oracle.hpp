#pragma once

// Brute-force pattern laws by direct enumeration of strings, permutations,
// signed permutations, permutation tuples and group words. Nothing here
// touches determinants, kernels or series; the only shared piece is the
// Rational type.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "onedpp/catalog.hpp"
#include "onedpp/error.hpp"
#include "onedpp/exact/rational.hpp"
#include "onedpp/groupcarries.hpp"

namespace onedpp {

struct OracleBudget {
  std::uint64_t max_states = 10'000'000;
};

// Connectivity sets of uniform permutations of S_n.
struct ConnectivityPermutations {};

using OracleModel = std::variant<ProcessName, CentralExtensionSetup, ConnectivityPermutations>;

namespace oracle_detail {

inline std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

inline std::uint64_t saturating_factorial(int n) {
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(i))
      return std::numeric_limits<std::uint64_t>::max();
    out *= static_cast<std::uint64_t>(i);
  }
  return out;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline void check_budget(std::uint64_t predicted, const OracleBudget& budget,
                         const std::string& what) {
  if (predicted > budget.max_states)
    throw BudgetError(what + " needs " + std::to_string(predicted) +
                      " states, budget is " + std::to_string(budget.max_states));
}

// Calls visit(digits) for every string in {0..radix-1}^length.
template <class Visit>
void for_each_string(int radix, int length, Visit&& visit) {
  std::vector<int> d(static_cast<std::size_t>(length), 0);
  while (true) {
    visit(d);
    int i = length - 1;
    while (i >= 0 && ++d[static_cast<std::size_t>(i)] == radix) d[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
  }
}

// Calls visit(perm) for every permutation of 1..n, lexicographically.
template <class Visit>
void for_each_permutation(int n, Visit&& visit) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    visit(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

inline std::uint64_t descent_mask(const std::vector<int>& w) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) m |= std::uint64_t{1} << i;
  return m;
}

inline int inversions(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv;
}

inline std::vector<Rational> normalize(const std::vector<Integer>& counts, const Integer& total) {
  std::vector<Rational> out;
  out.reserve(counts.size());
  for (const auto& c : counts) out.emplace_back(c, total);
  return out;
}

// Collapses (mask, inversions) tallies into Mallows probabilities and
// checks the weight sum against prod_{i<=n} [i]_q.
inline std::vector<Rational> mallows_weights(const std::vector<std::vector<Integer>>& by_inv,
                                             const Rational& q, int n) {
  std::vector<Rational> qpow{Rational(1)};
  const std::size_t max_inv = by_inv.empty() ? 0 : by_inv.front().size();
  for (std::size_t k = 1; k < max_inv; ++k) qpow.push_back(qpow.back() * q);
  std::vector<Rational> w(by_inv.size(), Rational(0));
  Rational z(0);
  for (std::size_t m = 0; m < by_inv.size(); ++m) {
    for (std::size_t k = 0; k < by_inv[m].size(); ++k)
      if (by_inv[m][k] != 0) w[m] += Rational(by_inv[m][k]) * qpow[k];
    z += w[m];
  }
  const Rational z_formula = q_factorial(q, n);
  if (z != z_formula)
    throw Error("Mallows normalizer mismatch: weight sum " + z.str() + ", product formula " +
                z_formula.str());
  for (auto& x : w) x /= z;
  return w;
}

}  // namespace oracle_detail

// Exact law of the pattern on positions 1..horizon-1, indexed by
// Pattern::mask().
inline std::vector<Rational> oracle_distribution(const OracleModel& model, int horizon,
                                                 const OracleBudget& budget = {}) {
  using namespace oracle_detail;
  if (horizon < 1) throw ParameterError("horizon must be >= 1");
  if (horizon - 1 > 30) throw BudgetError("pattern space too large");
  const std::size_t patterns = std::size_t{1} << (horizon - 1);
  const int n = horizon;

  if (std::holds_alternative<ConnectivityPermutations>(model)) {
    check_budget(saturating_factorial(n), budget, "connectivity oracle");
    std::vector<Integer> counts(patterns, Integer(0));
    for_each_permutation(n, [&](const std::vector<int>& p) {
      std::uint64_t m = 0;
      int running_max = 0;
      for (int i = 1; i < n; ++i) {
        running_max = std::max(running_max, p[static_cast<std::size_t>(i - 1)]);
        if (running_max == i) m |= std::uint64_t{1} << (i - 1);
      }
      counts[m] += 1;
    });
    return normalize(counts, factorial(static_cast<unsigned long>(n)));
  }

  if (const auto* setup = std::get_if<CentralExtensionSetup>(&model)) {
    const FiniteGroup& g = setup->group();
    const int m = setup->coset_count();
    check_budget(saturating_pow(static_cast<std::uint64_t>(m), n), budget, "group oracle");
    std::vector<Integer> counts(patterns, Integer(0));
    for_each_string(m, n, [&](const std::vector<int>& word) {
      int product = g.identity();
      int carried = g.identity();  // N-part of the running product
      std::uint64_t mask = 0;
      for (int i = 0; i < n; ++i) {
        product = g.mul(product, setup->rep(word[static_cast<std::size_t>(i)]));
        const int remainder = setup->rep(setup->coset_of(product));
        const int now = g.mul(g.inv(remainder), product);
        if (i > 0 && now != carried) mask |= std::uint64_t{1} << (i - 1);
        carried = now;
      }
      counts[mask] += 1;
    });
    return normalize(counts, Integer(pow(Rational(m), n).num()));
  }

  const ProcessName& name = std::get<ProcessName>(model);
  validate(name);
  return std::visit(
      [&](const auto& md) -> std::vector<Rational> {
        using T = std::decay_t<decltype(md)>;
        if constexpr (std::is_same_v<T, CarriesBaseB>) {
          check_budget(saturating_pow(static_cast<std::uint64_t>(md.b), n), budget, "digit strings");
          std::vector<Integer> counts(patterns, Integer(0));
          for_each_string(md.b, n, [&](const std::vector<int>& d) { counts[descent_mask(d)] += 1; });
          return normalize(counts, Integer(pow(Rational(md.b), n).num()));
        } else if constexpr (std::is_same_v<T, IidTrials>) {
          const int b = static_cast<int>(md.p.size());
          check_budget(saturating_pow(static_cast<std::uint64_t>(b), n), budget, "letter strings");
          std::vector<Rational> out(patterns, Rational(0));
          for_each_string(b, n, [&](const std::vector<int>& d) {
            Rational w(1);
            for (int x : d) w *= md.p[static_cast<std::size_t>(x)];
            if (!w.is_zero()) out[descent_mask(d)] += w;
          });
          return out;
        } else if constexpr (std::is_same_v<T, BrentiRelation>) {
          const int b = static_cast<int>(md.theta.size());
          check_budget(saturating_pow(static_cast<std::uint64_t>(b), n), budget, "letter strings");
          std::vector<Rational> out(patterns, Rational(0));
          for_each_string(b, n, [&](const std::vector<int>& d) {
            Rational w(1);
            std::uint64_t mask = 0;
            for (int i = 0; i < n; ++i) {
              w *= md.theta[static_cast<std::size_t>(d[static_cast<std::size_t>(i)])];
              if (i + 1 < n && !md.relation[static_cast<std::size_t>(d[static_cast<std::size_t>(i)])]
                                           [static_cast<std::size_t>(d[static_cast<std::size_t>(i + 1)])])
                mask |= std::uint64_t{1} << i;
            }
            if (!w.is_zero()) out[mask] += w;
          });
          return out;
        } else if constexpr (std::is_same_v<T, GenericPoints>) {
          const TwoBlockSampler h = generic_points_sampler(md.n);
          check_budget(saturating_pow(static_cast<std::uint64_t>(h.alphabet), n), budget, "symbol strings");
          std::vector<Integer> counts(patterns, Integer(0));
          for_each_string(h.alphabet, n, [&](const std::vector<int>& u) {
            std::uint64_t mask = 0;
            for (int i = 0; i + 1 < n; ++i)
              if (h.h[static_cast<std::size_t>(u[static_cast<std::size_t>(i)])]
                     [static_cast<std::size_t>(u[static_cast<std::size_t>(i + 1)])])
                mask |= std::uint64_t{1} << i;
            counts[mask] += 1;
          });
          return normalize(counts, Integer(pow(Rational(h.alphabet), n).num()));
        } else if constexpr (std::is_same_v<T, UniformDescents>) {
          check_budget(saturating_factorial(n), budget, "permutations");
          std::vector<Integer> counts(patterns, Integer(0));
          for_each_permutation(n, [&](const std::vector<int>& p) { counts[descent_mask(p)] += 1; });
          return normalize(counts, factorial(static_cast<unsigned long>(n)));
        } else if constexpr (std::is_same_v<T, AlternatingDescents>) {
          check_budget(saturating_factorial(n), budget, "permutations");
          std::vector<Integer> counts(patterns, Integer(0));
          for_each_permutation(n, [&](const std::vector<int>& p) {
            std::uint64_t mask = 0;
            for (int i = 1; i < n; ++i) {
              const bool down = p[static_cast<std::size_t>(i - 1)] > p[static_cast<std::size_t>(i)];
              if (i % 2 ? down : !down) mask |= std::uint64_t{1} << (i - 1);
            }
            counts[mask] += 1;
          });
          return normalize(counts, factorial(static_cast<unsigned long>(n)));
        } else if constexpr (std::is_same_v<T, MallowsDescents>) {
          check_budget(saturating_factorial(n), budget, "permutations");
          const std::size_t max_inv = static_cast<std::size_t>(n * (n - 1) / 2 + 1);
          std::vector<std::vector<Integer>> by_inv(patterns, std::vector<Integer>(max_inv, Integer(0)));
          for_each_permutation(n, [&](const std::vector<int>& p) {
            by_inv[descent_mask(p)][static_cast<std::size_t>(inversions(p))] += 1;
          });
          return mallows_weights(by_inv, md.q, n);
        } else if constexpr (std::is_same_v<T, BinomialPosetUnion>) {
          const std::uint64_t one = saturating_factorial(n);
          check_budget(saturating_pow(one, md.r), budget, "permutation tuples");
          std::vector<std::uint64_t> masks;
          std::vector<int> invs;
          for_each_permutation(n, [&](const std::vector<int>& p) {
            masks.push_back(descent_mask(p));
            invs.push_back(inversions(p));
          });
          const std::size_t max_inv = static_cast<std::size_t>(md.r * n * (n - 1) / 2 + 1);
          std::vector<std::vector<Integer>> by_inv(patterns, std::vector<Integer>(max_inv, Integer(0)));
          const int count = static_cast<int>(masks.size());
          for_each_string(count, md.r, [&](const std::vector<int>& pick) {
            std::uint64_t mask = 0;
            int inv = 0;
            for (int idx : pick) {
              mask |= masks[static_cast<std::size_t>(idx)];
              inv += invs[static_cast<std::size_t>(idx)];
            }
            by_inv[mask][static_cast<std::size_t>(inv)] += 1;
          });
          std::vector<Rational> qpow{Rational(1)};
          for (std::size_t k = 1; k < max_inv; ++k) qpow.push_back(qpow.back() * md.q);
          const Rational z = pow(q_factorial(md.q, n), md.r);
          std::vector<Rational> out(patterns, Rational(0));
          Rational total(0);
          for (std::size_t m = 0; m < patterns; ++m) {
            for (std::size_t k = 0; k < max_inv; ++k)
              if (by_inv[m][k] != 0) out[m] += Rational(by_inv[m][k]) * qpow[k];
            total += out[m];
          }
          if (total != z) throw Error("Mallows tuple normalizer mismatch");
          for (auto& x : out) x /= z;
          return out;
        } else {
          static_assert(std::is_same_v<T, TypeBDescents>);
          const int k = md.n;
          if (horizon != k + 1)
            throw ParameterError("type B descents of B_" + std::to_string(k) +
                                 " live on horizon " + std::to_string(k + 1));
          check_budget(saturating_mul(saturating_pow(2, k), saturating_factorial(k)), budget,
                       "signed permutations");
          std::vector<Integer> counts(patterns, Integer(0));
          // rank in 1 < 2 < ... < k < -k < ... < -1
          const auto rank = [k](int v) { return v > 0 ? v : 2 * k + 1 + v; };
          for_each_permutation(k, [&](const std::vector<int>& p) {
            for_each_string(2, k, [&](const std::vector<int>& signs) {
              std::vector<int> s(static_cast<std::size_t>(k));
              for (int i = 0; i < k; ++i)
                s[static_cast<std::size_t>(i)] = signs[static_cast<std::size_t>(i)] ? -p[static_cast<std::size_t>(i)]
                                                                                    : p[static_cast<std::size_t>(i)];
              std::uint64_t mask = 0;
              for (int i = 0; i + 1 < k; ++i)
                if (rank(s[static_cast<std::size_t>(i)]) > rank(s[static_cast<std::size_t>(i + 1)]))
                  mask |= std::uint64_t{1} << i;
              if (s.back() < 0) mask |= std::uint64_t{1} << (k - 1);
              counts[mask] += 1;
            });
          });
          return normalize(counts, factorial(static_cast<unsigned long>(k)) * (Integer(1) << k));
        }
      },
      name);
}

// rho(A) = P{S contains A} by superset summation; indexed by the mask of A.
inline std::vector<Rational> oracle_correlations(const std::vector<Rational>& distribution) {
  std::vector<Rational> rho = distribution;
  const std::size_t size = rho.size();
  for (std::size_t bit = 1; bit < size; bit <<= 1)
    for (std::size_t m = 0; m < size; ++m)
      if (!(m & bit)) rho[m] += rho[m | bit];
  return rho;
}

inline std::vector<Rational> oracle_correlations(const OracleModel& model, int horizon,
                                                 const OracleBudget& budget = {}) {
  return oracle_correlations(oracle_distribution(model, horizon, budget));
}

}  // namespace onedpp
