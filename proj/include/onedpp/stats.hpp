#pragma once

// Law of the point count N of a determinantal process: E x^N = det(I + (x-1)K),
// moments from traces, a normal-approximation report, numeric eigenvalues,
// and seeded Monte Carlo samplers for the catalog models.
//
// Eigenvalues come from the exact characteristic polynomial; its roots are
// the one place besides Phi and z-scores where doubles appear.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "onedpp/catalog.hpp"
#include "onedpp/error.hpp"
#include "onedpp/exact/matrix.hpp"
#include "onedpp/exact/polynomial.hpp"
#include "onedpp/exact/rational.hpp"
#include "onedpp/onedep/kernel.hpp"
#include "onedpp/random.hpp"

namespace onedpp {

// Coefficients c_0..c_d of E x^N; c_j = P(N = j).
struct CountPolynomial {
  std::vector<Rational> coefficients;

  Rational operator()(const Rational& x) const {
    Rational v(0);
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) v = v * x + *it;
    return v;
  }
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

// det(I + (x-1)K) evaluated exactly at x = 0..d and interpolated.
inline CountPolynomial count_polynomial(const DenseKernel& k) {
  const std::size_t d = k.size();
  const RationalMatrix& m = k.matrix();
  std::vector<Rational> ys;
  ys.reserve(d + 1);
  for (std::size_t x = 0; x <= d; ++x) {
    RationalMatrix a = Rational(static_cast<long>(x) - 1) * m;
    for (std::size_t i = 0; i < d; ++i) a(i, i) += 1;
    ys.push_back(det(a));
  }
  // Newton divided differences on nodes 0..d, then expand.
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level <= d; ++level)
    for (std::size_t i = d; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
  std::vector<Rational> poly{dd[d]};
  for (std::size_t i = d; i-- > 0;) {
    // poly = poly * (x - i) + dd[i]
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * Rational(static_cast<long>(i));
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  poly.resize(d + 1, Rational(0));
  return {std::move(poly)};
}

inline CountPolynomial count_polynomial(const Kernel& k, int horizon) {
  return count_polynomial(materialize(k, horizon));
}

struct Moments {
  Rational mean;
  Rational variance;
};

// mean = tr K, variance = tr(K - K^2).
inline Moments count_moments(const DenseKernel& k) {
  const RationalMatrix& m = k.matrix();
  return {m.trace(), (m - m * m).trace()};
}

inline Moments count_moments(const Kernel& k, int horizon) {
  return count_moments(materialize(k, horizon));
}

inline Moments distribution_moments(const std::vector<Rational>& p) {
  Rational mean(0), second(0);
  for (std::size_t j = 0; j < p.size(); ++j) {
    const Rational x(static_cast<long>(j));
    mean += x * p[j];
    second += x * x * p[j];
  }
  return {mean, second - mean * mean};
}

// Eulerian numbers A(n, j), j = 0..n-1: permutations of S_n with j descents.
inline std::vector<Integer> eulerian_numbers(int n) {
  if (n < 1) throw ParameterError("n must be >= 1");
  std::vector<Integer> row{Integer(1)};
  for (int m = 2; m <= n; ++m) {
    std::vector<Integer> next(static_cast<std::size_t>(m), Integer(0));
    for (int j = 0; j < m; ++j) {
      if (j < m - 1) next[static_cast<std::size_t>(j)] += (j + 1) * row[static_cast<std::size_t>(j)];
      if (j > 0) next[static_cast<std::size_t>(j)] += (m - j) * row[static_cast<std::size_t>(j - 1)];
    }
    row = std::move(next);
  }
  return row;
}

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

struct NormalApproxReport {
  Rational mean;
  Rational variance;
  double sigma = 0;
  double sup_distance = 0;  // sup_t |P((N - mean)/sigma <= t) - Phi(t)|
  double bound = 0;         // 0.80 / sigma
  bool within_bound = false;
  int mode = 0;
  double mode_offset = 0;   // |mode - mean|
  bool unimodal = false;
};

// Sup distance is attained at the jumps of the exact CDF, so both one-sided
// limits at every atom are compared with Phi.
inline NormalApproxReport normal_approx_check(const CountPolynomial& law) {
  NormalApproxReport r;
  const auto& p = law.coefficients;
  const Moments mom = distribution_moments(p);
  r.mean = mom.mean;
  r.variance = mom.variance;
  r.sigma = std::sqrt(mom.variance.to_double());
  if (r.sigma <= 0) throw ParameterError("degenerate count distribution");
  const double mu = mom.mean.to_double();
  Rational cdf(0);
  double sup = 0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double z = (static_cast<double>(j) - mu) / r.sigma;
    const double phi = normal_cdf(z);
    sup = std::max(sup, std::abs(cdf.to_double() - phi));
    cdf += p[j];
    sup = std::max(sup, std::abs(cdf.to_double() - phi));
  }
  r.sup_distance = sup;
  r.bound = 0.80 / r.sigma;
  r.within_bound = sup <= r.bound;
  std::size_t mode = 0;
  for (std::size_t j = 1; j < p.size(); ++j)
    if (p[j] > p[mode]) mode = j;
  r.mode = static_cast<int>(mode);
  r.mode_offset = std::abs(static_cast<double>(mode) - mu);
  bool ok = true;
  for (std::size_t j = 1; j <= mode; ++j) ok = ok && p[j] >= p[j - 1];
  for (std::size_t j = mode + 1; j < p.size(); ++j) ok = ok && p[j] <= p[j - 1];
  r.unimodal = ok;
  return r;
}

inline NormalApproxReport normal_approx_check(const DenseKernel& k) {
  return normal_approx_check(count_polynomial(k));
}

struct EigenReport {
  std::vector<std::complex<double>> values;  // with multiplicity, sorted by real part
  double residual = 0;                       // max |f(lambda)| over the squarefree factors
  double max_imag = 0;
  int distinct = 0;                          // distinct eigenvalues, exact
  int distinct_real = 0;                     // distinct real eigenvalues, exact (Sturm)

  bool all_real(double tol) const { return max_imag <= tol; }
  bool all_real_exact() const { return distinct == distinct_real; }
};

// Roots of the exact characteristic polynomial, factor by squarefree
// factor, so repeated eigenvalues (Jordan blocks included) stay sharp.
// Only the root-finding step is floating point.
inline EigenReport numeric_eigenvalues(const DenseKernel& k) {
  EigenReport r;
  if (k.size() == 0) return r;
  const auto factors = squarefree_factors(characteristic_polynomial(k.matrix()));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Polynomial& f = factors[i];
    const int d = degree(f);
    if (d < 1) continue;
    r.distinct += d;
    r.distinct_real += real_root_count(f);
    const Polynomial m = monic(f);
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    for (int j = 1; j < d; ++j) companion(j, j - 1) = 1;
    for (int j = 0; j < d; ++j) companion(j, d - 1) = -m[static_cast<std::size_t>(j)].to_double();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw Error("eigen decomposition failed");
    const Eigen::VectorXcd roots = solver.eigenvalues();
    const auto eval = [&](std::complex<double> x) {
      std::complex<double> v = 0, dv = 0;
      for (std::size_t c = m.size(); c-- > 0;) {
        dv = dv * x + v;
        v = v * x + m[c].to_double();
      }
      return std::pair{v, dv};
    };
    for (Eigen::Index j = 0; j < roots.size(); ++j) {
      std::complex<double> x = roots(j);
      for (int step = 0; step < 3; ++step) {
        const auto [v, dv] = eval(x);
        if (std::abs(dv) == 0) break;
        x -= v / dv;
      }
      if (std::abs(x.imag()) <= 1e-300) x = {x.real(), 0.0};
      const std::complex<double> v = eval(x).first;
      r.residual = std::max(r.residual, std::abs(v));
      for (std::size_t rep = 0; rep <= i; ++rep) r.values.push_back(x);
      r.max_imag = std::max(r.max_imag, std::abs(x.imag()));
    }
  }
  std::sort(r.values.begin(), r.values.end(), [](const auto& x, const auto& y) {
    return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
  });
  return r;
}

// Monte Carlo ---------------------------------------------------------------

struct Gate {
  std::string name;
  double estimate = 0;
  double expected = 0;
  double standard_error = 0;
  double z = 0;
  bool passed = false;
};

// Passes when |estimate - expected| <= sigmas * standard_error.
inline Gate make_gate(std::string name, double estimate, double expected,
                      double standard_error, double sigmas = 4.0) {
  Gate g;
  g.name = std::move(name);
  g.estimate = estimate;
  g.expected = expected;
  g.standard_error = standard_error;
  const double diff = std::abs(estimate - expected);
  g.z = standard_error > 0 ? diff / standard_error : (diff == 0 ? 0 : INFINITY);
  g.passed = diff <= sigmas * standard_error;
  return g;
}

// Uniform permutation of 1..n.
inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(pick(rng))]);
  }
  return p;
}

// Mallows permutation with weight q^{inv}: value i is inserted with j of
// the smaller values to its right with probability q^j / [i]_q, drawn
// exactly from the integer weights num^j den^{i-1-j}.
inline std::vector<int> mallows_permutation(int n, const Rational& q, std::mt19937_64& rng) {
  std::vector<int> p;
  p.reserve(static_cast<std::size_t>(n));
  const Integer& a = q.num();
  const Integer& b = q.den();
  for (int i = 1; i <= n; ++i) {
    std::vector<Integer> w(static_cast<std::size_t>(i));
    for (int j = 0; j < i; ++j) {
      Integer x;
      mpz_pow_ui(x.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(j));
      Integer y;
      mpz_pow_ui(y.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(i - 1 - j));
      w[static_cast<std::size_t>(j)] = x * y;
    }
    const auto j = static_cast<std::ptrdiff_t>(pick_weighted(w, rng));
    p.insert(p.end() - j, i);
  }
  return p;
}

struct SimulationResult {
  std::string model;
  int horizon = 0;
  std::uint64_t reps = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> pattern_counts;  // by mask; empty if horizon > 21
  std::vector<std::uint64_t> count_histogram; // number of ones
  std::vector<std::uint64_t> site_ones;       // per position 1..n-1
  // joint[i] = counts of (X_{i+1}, X_{i+2}) in {00, 01, 10, 11}
  std::vector<std::array<std::uint64_t, 4>> adjacent;

  double site_rate(int position) const {
    return static_cast<double>(site_ones[static_cast<std::size_t>(position - 1)]) / static_cast<double>(reps);
  }
  double site_rate_se(int position) const {
    const double p = site_rate(position);
    return std::sqrt(p * (1 - p) / static_cast<double>(reps));
  }
  // Sample covariance of (X_i, X_{i+1}) and the standard error of the
  // mean of (X_i - xbar)(X_{i+1} - ybar).
  std::pair<double, double> adjacent_covariance(int position) const {
    const auto& c = adjacent[static_cast<std::size_t>(position - 1)];
    const double r = static_cast<double>(reps);
    const double mx = static_cast<double>(c[2] + c[3]) / r;
    const double my = static_cast<double>(c[1] + c[3]) / r;
    double mean = 0, second = 0;
    for (int cell = 0; cell < 4; ++cell) {
      const double x = (cell >> 1) - mx;
      const double y = (cell & 1) - my;
      const double w = static_cast<double>(c[static_cast<std::size_t>(cell)]) / r;
      mean += w * x * y;
      second += w * x * y * x * y;
    }
    return {mean, std::sqrt((second - mean * mean) / r)};
  }
  double pattern_frequency(std::uint64_t mask) const {
    return static_cast<double>(pattern_counts[mask]) / static_cast<double>(reps);
  }
};

// One path X_1..X_{n-1} of a catalog model.
inline std::vector<std::uint8_t> sample_path(const ProcessName& name, int horizon,
                                             std::mt19937_64& rng) {
  const int n = horizon;
  std::vector<std::uint8_t> x(static_cast<std::size_t>(std::max(n - 1, 0)), 0);
  const auto descents = [&](const std::vector<int>& w) {
    for (int i = 0; i + 1 < n; ++i) x[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(i + 1)];
  };
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, CarriesBaseB>) {
          std::uniform_int_distribution<int> digit(0, m.b - 1);
          std::vector<int> w(static_cast<std::size_t>(n));
          for (auto& d : w) d = digit(rng);
          descents(w);
        } else if constexpr (std::is_same_v<T, IidTrials>) {
          Integer common(1);
          for (const auto& p : m.p) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), p.den().get_mpz_t());
          std::vector<Integer> w;
          for (const auto& p : m.p) w.push_back(p.num() * (common / p.den()));
          std::vector<int> s(static_cast<std::size_t>(n));
          for (auto& d : s) d = static_cast<int>(pick_weighted(w, rng));
          descents(s);
        } else if constexpr (std::is_same_v<T, UniformDescents>) {
          descents(random_permutation(n, rng));
        } else if constexpr (std::is_same_v<T, MallowsDescents>) {
          descents(mallows_permutation(n, m.q, rng));
        } else if constexpr (std::is_same_v<T, AlternatingDescents>) {
          const auto p = random_permutation(n, rng);
          for (int i = 1; i < n; ++i) {
            const bool down = p[static_cast<std::size_t>(i - 1)] > p[static_cast<std::size_t>(i)];
            x[static_cast<std::size_t>(i - 1)] = i % 2 ? down : !down;
          }
        } else if constexpr (std::is_same_v<T, GenericPoints>) {
          const TwoBlockSampler h = generic_points_sampler(m.n);
          std::uniform_int_distribution<int> sym(0, h.alphabet - 1);
          std::vector<int> u(static_cast<std::size_t>(n));
          for (auto& s : u) s = sym(rng);
          for (int i = 0; i + 1 < n; ++i)
            x[static_cast<std::size_t>(i)] = h.h[static_cast<std::size_t>(u[static_cast<std::size_t>(i)])][static_cast<std::size_t>(u[static_cast<std::size_t>(i + 1)])];
        } else {
          throw ParameterError("no sampler for " + format(ProcessName{m}));
        }
      },
      name);
  return x;
}

inline SimulationResult simulate_process(const ProcessName& name, int horizon,
                                         std::uint64_t reps, std::uint64_t seed) {
  validate(name);
  if (horizon < 2) throw ParameterError("horizon must be >= 2");
  if (reps == 0) throw ParameterError("reps must be positive");
  SimulationResult r;
  r.model = format(name);
  r.horizon = horizon;
  r.reps = reps;
  r.seed = seed;
  const int len = horizon - 1;
  if (len <= 20) r.pattern_counts.assign(std::size_t{1} << len, 0);
  r.count_histogram.assign(static_cast<std::size_t>(len + 1), 0);
  r.site_ones.assign(static_cast<std::size_t>(len), 0);
  r.adjacent.assign(static_cast<std::size_t>(std::max(len - 1, 0)), {0, 0, 0, 0});
  std::mt19937_64 rng(seed);
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    const auto x = sample_path(name, horizon, rng);
    std::uint64_t mask = 0;
    int ones = 0;
    for (int i = 0; i < len; ++i)
      if (x[static_cast<std::size_t>(i)]) {
        mask |= std::uint64_t{1} << i;
        ++ones;
        ++r.site_ones[static_cast<std::size_t>(i)];
      }
    for (int i = 0; i + 1 < len; ++i)
      ++r.adjacent[static_cast<std::size_t>(i)][static_cast<std::size_t>(2 * x[static_cast<std::size_t>(i)] + x[static_cast<std::size_t>(i + 1)])];
    ++r.count_histogram[static_cast<std::size_t>(ones)];
    if (!r.pattern_counts.empty()) ++r.pattern_counts[mask];
  }
  return r;
}

struct UniformSumReport {
  int n = 0;
  std::uint64_t reps = 0;
  std::vector<std::uint64_t> floor_counts;  // floor(U_1 + ... + U_n) = j
  std::vector<Rational> exact;              // A(n, j) / n!
  std::vector<Gate> gates;
  std::uint64_t pathwise_mismatches = 0;    // paths where dots != descents of V
};

// U_i = k_i / 2^53 with k_i uniform 53-bit integers, so partial sums,
// their integer parts and the remainders V_i are computed exactly. A dot
// at i (partial sum crosses an integer between i and i+1 terms) must
// coincide with a descent V_{i+1} < V_i.
inline UniformSumReport uniform_sum_check(int n, std::uint64_t reps, std::uint64_t seed) {
  if (n < 1) throw ParameterError("n must be >= 1");
  if (n > 1024) throw ParameterError("n too large for exact 64-bit partial sums");
  constexpr int kBits = 53;
  constexpr std::uint64_t kMask = (std::uint64_t{1} << kBits) - 1;
  UniformSumReport r;
  r.n = n;
  r.reps = reps;
  r.floor_counts.assign(static_cast<std::size_t>(n), 0);
  std::mt19937_64 rng(seed);
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    std::uint64_t sum = 0, prev_v = 0;
    int dots = 0;
    bool consistent = true;
    for (int i = 1; i <= n; ++i) {
      const std::uint64_t k = rng() >> (64 - kBits);
      const std::uint64_t before = sum >> kBits;
      sum += k;
      const std::uint64_t v = sum & kMask;
      if (i >= 2) {
        const bool dot = (sum >> kBits) > before;
        const bool descent = v < prev_v;
        consistent = consistent && dot == descent;
        dots += dot;
      }
      prev_v = v;
    }
    const auto whole = static_cast<int>(sum >> kBits);
    consistent = consistent && whole == dots;
    if (!consistent) ++r.pathwise_mismatches;
    ++r.floor_counts[static_cast<std::size_t>(std::min(whole, n - 1))];
  }
  const auto a = eulerian_numbers(n);
  const Integer nf = factorial(static_cast<unsigned long>(n));
  for (int j = 0; j < n; ++j) {
    r.exact.emplace_back(a[static_cast<std::size_t>(j)], nf);
    const double p = r.exact.back().to_double();
    const double est = static_cast<double>(r.floor_counts[static_cast<std::size_t>(j)]) / static_cast<double>(reps);
    r.gates.push_back(make_gate("P(floor = " + std::to_string(j) + ")", est, p,
                                std::sqrt(p * (1 - p) / static_cast<double>(reps))));
  }
  return r;
}

}  // namespace onedpp
