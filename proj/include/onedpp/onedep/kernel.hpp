#pragma once

// Correlation kernels of one-dependent processes.
//
// Stationary kernels K(x, y) = k(y - x) are held as the Laurent symbol
// k^(z) = sum_m k(m) z^m and always produced in the canonical form
// k^(z) = 1 / (1 - 1/e^(z)) from Toeplitz weights e. Other normal forms in
// use (e.g. 1 / (1 - R(z)) with k(-1) = -1) differ from it by a diagonal
// conjugation k(m) -> c^m k(m), which leaves every minor unchanged; see
// StationaryKernel::conjugated.

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "onedpp/error.hpp"
#include "onedpp/exact/matrix.hpp"
#include "onedpp/exact/series.hpp"
#include "onedpp/onedep/pattern.hpp"
#include "onedpp/onedep/spec.hpp"

namespace onedpp {

class StationaryKernel {
 public:
  StationaryKernel() = default;
  explicit StationaryKernel(LaurentSeries symbol) : symbol_(std::move(symbol)) {}

  const LaurentSeries& symbol() const { return symbol_; }
  long max_offset() const { return symbol_.order() - 1; }

  // k(m); zero for m <= -2, TruncationError beyond max_offset().
  Rational operator()(long m) const {
    if (m <= -2) return Rational(0);
    return symbol_.coeff(m);
  }
  Rational entry(long x, long y) const { return (*this)(y - x); }

  // k(m) -> c^m k(m).
  StationaryKernel conjugated(const Rational& c) const {
    return StationaryKernel(symbol_.rescaled(c));
  }

  // (K(x, y)) for x, y in first .. first + count - 1.
  RationalMatrix block(long first, std::size_t count) const {
    RationalMatrix m(count, count);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j)
        m(i, j) = entry(first + static_cast<long>(i), first + static_cast<long>(j));
    return m;
  }

 private:
  LaurentSeries symbol_;
};

// Kernel materialized on consecutive positions first .. first + size - 1.
class DenseKernel {
 public:
  DenseKernel() = default;
  DenseKernel(RationalMatrix k, long first_position)
      : k_(std::move(k)), first_(first_position) {
    if (!k_.square()) throw DimensionError("kernel matrix must be square");
  }

  const RationalMatrix& matrix() const { return k_; }
  long first_position() const { return first_; }
  long last_position() const { return first_ + static_cast<long>(k_.rows()) - 1; }
  std::size_t size() const { return k_.rows(); }

  Rational operator()(long x, long y) const { return k_(index(x), index(y)); }

  // det[K(a_i, a_j)] over the positions in A.
  Rational minor(const PositionSet& positions) const {
    std::vector<std::size_t> idx;
    idx.reserve(positions.size());
    for (int p : positions) idx.push_back(index(p));
    return det(k_.principal(idx));
  }

  std::size_t index(long position) const {
    if (position < first_ || position > last_position())
      throw ParameterError("position " + std::to_string(position) +
                           " outside the kernel's range");
    return static_cast<std::size_t>(position - first_);
  }

 private:
  RationalMatrix k_;
  long first_ = 1;
};

using Kernel = std::variant<StationaryKernel, DenseKernel>;

inline DenseKernel materialize(const StationaryKernel& k, long first,
                               std::size_t count) {
  return DenseKernel(k.block(first, count), first);
}

// Dense kernel on the positions 1..n-1 of a process with horizon n.
inline DenseKernel materialize(const Kernel& k, int horizon) {
  if (const auto* s = std::get_if<StationaryKernel>(&k))
    return materialize(*s, 1, static_cast<std::size_t>(horizon - 1));
  const auto& d = std::get<DenseKernel>(k);
  if (d.first_position() != 1 || static_cast<int>(d.size()) != horizon - 1)
    throw DimensionError("dense kernel does not match the horizon");
  return d;
}

// 1/e^(z) known below `order`, for a stationary spec. For run
// probabilities with e(1) = 1 this is A(-z) = sum_j a_j (-z)^j.
inline LaurentSeries reciprocal_weight_series(const OneDepSpec& spec,
                                              long order) {
  if (const auto* a = std::get_if<StationaryA>(&spec.form()))
    return a->a.series(order).negated_variable();
  if (const auto* e = std::get_if<StationaryE>(&spec.form()))
    return series_reciprocal(e->e.series(order), order);
  throw ParameterError("stationary kernel needs a stationary spec");
}

// Laurent coefficients k(m), m <= max_offset, of 1 / (1 - 1/e^(z)).
inline StationaryKernel kernel_stationary(const OneDepSpec& spec,
                                          long max_offset) {
  if (max_offset < -1) max_offset = -1;
  const long need = max_offset + 3;
  const LaurentSeries one = LaurentSeries::polynomial({Rational(1)}, need);
  const LaurentSeries denom = one - reciprocal_weight_series(spec, need);
  return StationaryKernel(series_reciprocal(denom, max_offset + 1));
}

// Enough offsets for every entry on the spec's horizon.
inline StationaryKernel kernel_stationary(const OneDepSpec& spec) {
  return kernel_stationary(spec, std::max(spec.horizon() - 2, 0));
}

// The alternating chain-sum kernel for interval correlations:
//   K(x, y) = 0 for x - y >= 2, -1 for x - y = 1, and for x <= y
//   sum_r (-1)^{r-1} sum_{x = l_0 < ... < l_r = y+1} prod rho([l_{i-1}, l_i)).
// The inner sum is accumulated by G(l) = rho([x,l)) - sum_{x<m<l} G(m) rho([m,l)).
inline Rational kernel_general(const IntervalRho& rho, int x, int y) {
  if (x - y >= 2) return Rational(0);
  if (x - y == 1) return Rational(-1);
  std::vector<Rational> g(static_cast<std::size_t>(y - x + 2));
  for (int l = x + 1; l <= y + 1; ++l) {
    Rational v = rho(x, l);
    for (int m = x + 1; m < l; ++m) v -= g[static_cast<std::size_t>(m - x)] * rho(m, l);
    g[static_cast<std::size_t>(l - x)] = std::move(v);
  }
  return g.back();
}

inline DenseKernel kernel_general(const OneDepSpec& spec) {
  const auto* rho = std::get_if<IntervalRho>(&spec.form());
  if (!rho) throw ParameterError("kernel_general needs interval correlations");
  const int m = spec.horizon() - 1;
  RationalMatrix k(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y)
      k(static_cast<std::size_t>(x - 1), static_cast<std::size_t>(y - 1)) =
          kernel_general(*rho, x, y);
  return DenseKernel(std::move(k), 1);
}

struct TableKernel {
  DenseKernel kernel;
  Rational normalizer;  // h(n) = 1 / det E
};

// K(x, y) = delta_{x,y} + (E^{-1})_{x, y+1} with E = [e(i-1, j)]_{i,j=1}^n
// taken on and above the diagonal (j >= i), zero below.
inline TableKernel kernel_from_E(const OneDepSpec& spec) {
  const auto* table = std::get_if<TableE>(&spec.form());
  if (!table) throw ParameterError("kernel_from_E needs an e-table spec");
  const int n = spec.horizon();
  RationalMatrix big_e(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  Rational det_e(1);
  for (int i = 1; i <= n; ++i) {
    det_e *= table->e(i - 1, i);
    for (int j = i; j <= n; ++j)
      big_e(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          table->e(i - 1, j);
  }
  if (det_e.is_zero()) throw SingularMatrixError("zero superdiagonal in e-table");
  const RationalMatrix inv = inverse(big_e);
  const int m = n - 1;
  RationalMatrix k(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y) {
      Rational v = inv(static_cast<std::size_t>(x - 1), static_cast<std::size_t>(y));
      if (x == y) v += 1;
      k(static_cast<std::size_t>(x - 1), static_cast<std::size_t>(y - 1)) = std::move(v);
    }
  return {DenseKernel(std::move(k), 1), Rational(1) / det_e};
}

// The kernel of any spec on its horizon. Stationary specs use the
// canonical Laurent form; e-tables use the inverse-E kernel; interval
// correlations use the chain-sum kernel.
inline DenseKernel dense_kernel(const OneDepSpec& spec) {
  switch (spec.form().index()) {
    case 0:
    case 1:
      return materialize(kernel_stationary(spec), 1,
                         static_cast<std::size_t>(spec.horizon() - 1));
    case 2:
      return kernel_from_E(spec).kernel;
    default:
      return kernel_general(spec);
  }
}

// P(S = ones(pattern)) = (-1)^{#zeros} det(K - I_zeros).
inline Rational pattern_probability_from_kernel(const DenseKernel& k,
                                                const Pattern& pattern) {
  if (static_cast<int>(k.size()) != pattern.length() || k.first_position() != 1)
    throw DimensionError("kernel size does not match pattern length");
  RationalMatrix m = k.matrix();
  int zeros = 0;
  for (int i = 1; i <= pattern.length(); ++i)
    if (!pattern[i]) {
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) -= 1;
      ++zeros;
    }
  const Rational d = det(m);
  return zeros % 2 ? -d : d;
}

}  // namespace onedpp
