#pragma once

// Connectivity set C(sigma) = {i : sigma maps {1..i} onto itself} of a
// uniform permutation in S_n. Together with 0 and n it is the trajectory
// of the chain on {0..n} started at 0 with
//   P(i, j) = (n-j)! f(j-i) / (n-i)!,
// f the indecomposable counts, and it is determinantal with kernel
//   K(x, y) = delta_{0,x} + Q(0, x) - Q(y, x),  Q = P + P^2 + ... .

#include <random>
#include <vector>

#include "onedpp/error.hpp"
#include "onedpp/exact/matrix.hpp"
#include "onedpp/exact/rational.hpp"
#include "onedpp/exact/series.hpp"
#include "onedpp/onedep/kernel.hpp"
#include "onedpp/random.hpp"

namespace onedpp {

// f(0) = 0, f(1), ..., f(n) from sum f(m) x^m = 1 - 1 / sum m! x^m.
inline std::vector<Integer> indecomposable_counts(int n) {
  if (n < 1) throw ParameterError("n must be >= 1");
  const long order = n + 1;
  const auto fact = LaurentSeries::generate(
      [](long m) { return Rational(factorial(static_cast<unsigned long>(m))); }, order);
  const LaurentSeries g =
      LaurentSeries::polynomial({Rational(1)}, order) - series_reciprocal(fact, order);
  std::vector<Integer> f;
  f.reserve(static_cast<std::size_t>(order));
  for (long m = 0; m < order; ++m) f.push_back(g.coeff(m).num());
  return f;
}

inline RationalMatrix connectivity_transition(int n) {
  const auto f = indecomposable_counts(n);
  const auto size = static_cast<std::size_t>(n + 1);
  RationalMatrix p(size, size);
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      p(i, j) = Rational(factorial(static_cast<unsigned long>(n - j)) * f[static_cast<std::size_t>(j - i)],
                         factorial(static_cast<unsigned long>(n - i)));
  return p;
}

// P + P^2 + ... + P^n; P is strictly upper triangular so the series stops.
inline RationalMatrix connectivity_q_series(const RationalMatrix& p) {
  RationalMatrix power = p;
  RationalMatrix sum = p;
  for (std::size_t r = 2; r <= p.rows(); ++r) {
    power = power * p;
    sum = sum + power;
  }
  return sum;
}

// Q(i, j) = 1 / C(n-i, n-j) for i < j, else 0.
inline RationalMatrix connectivity_q_closed(int n) {
  const auto size = static_cast<std::size_t>(n + 1);
  RationalMatrix q(size, size);
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) q(i, j) = Rational(Integer(1), binomial(n - i, n - j));
  return q;
}

// Kernel on {0..n} from Q via delta_{0,x} + Q(0,x) - Q(y,x).
inline DenseKernel connectivity_kernel_from_q(const RationalMatrix& q) {
  const std::size_t size = q.rows();
  RationalMatrix k(size, size);
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y) {
      Rational v = q(0, x) - q(y, x);
      if (x == 0) v += 1;
      k(x, y) = std::move(v);
    }
  return DenseKernel(std::move(k), 0);
}

// Closed form: K(0, y) = 1, K(n, y) = delta_{n,y}, and for 0 < x < n
// K(x, y) = 1/C(n,x) when x <= y, 1/C(n,x) - 1/C(n-y, n-x) when x > y.
inline DenseKernel connectivity_kernel(int n) {
  if (n < 1) throw ParameterError("n must be >= 1");
  const auto size = static_cast<std::size_t>(n + 1);
  RationalMatrix k(size, size);
  for (int x = 0; x <= n; ++x)
    for (int y = 0; y <= n; ++y) {
      Rational v;
      if (x == 0) {
        v = 1;
      } else if (x == n) {
        v = x == y ? 1 : 0;
      } else {
        v = Rational(Integer(1), binomial(n, x));
        if (x > y) v -= Rational(Integer(1), binomial(n - y, n - x));
      }
      k(x, y) = std::move(v);
    }
  return DenseKernel(std::move(k), 0);
}

struct ConnectivityModel {
  int n = 0;
  std::vector<Integer> f;  // f(0..n)
  RationalMatrix p;
  RationalMatrix q;
  DenseKernel k;
};

inline ConnectivityModel connectivity_model(int n) {
  ConnectivityModel m;
  m.n = n;
  m.f = indecomposable_counts(n);
  m.p = connectivity_transition(n);
  m.q = connectivity_q_series(m.p);
  m.k = connectivity_kernel_from_q(m.q);
  return m;
}

// P(S subset of C) = s_1! (s_2 - s_1)! ... (n - s_k)! / n!.
inline Rational connectivity_correlation(int n, const PositionSet& s) {
  Integer num(1);
  int prev = 0;
  for (int x : s) {
    if (x <= prev || x >= n) throw ParameterError("positions must increase within 1..n-1");
    num *= factorial(static_cast<unsigned long>(x - prev));
    prev = x;
  }
  num *= factorial(static_cast<unsigned long>(n - prev));
  return Rational(num, factorial(static_cast<unsigned long>(n)));
}

// One trajectory 0 = l_0 < l_1 < ... = n; each step drawn exactly with
// integer weights (n-j)! f(j-i) out of (n-i)!.
inline std::vector<int> simulate_connectivity(int n, std::mt19937_64& rng,
                                              const std::vector<Integer>& f) {
  std::vector<int> path{0};
  int i = 0;
  while (i < n) {
    std::vector<Integer> w;
    w.reserve(static_cast<std::size_t>(n - i));
    for (int j = i + 1; j <= n; ++j)
      w.push_back(factorial(static_cast<unsigned long>(n - j)) * f[static_cast<std::size_t>(j - i)]);
    i += static_cast<int>(pick_weighted(w, rng)) + 1;
    path.push_back(i);
  }
  return path;
}

inline std::vector<int> simulate_connectivity(int n, std::mt19937_64& rng) {
  return simulate_connectivity(n, rng, indecomposable_counts(n));
}

}  // namespace onedpp
