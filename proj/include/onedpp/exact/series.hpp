#pragma once

// Truncated formal Laurent series  sum_{m >= min_degree} c_m z^m  with
// coefficients known exactly for every degree below `order()`.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "onedpp/error.hpp"
#include "onedpp/exact/rational.hpp"

namespace onedpp {

class LaurentSeries {
 public:
  LaurentSeries() = default;

  // coeffs[i] is the coefficient of z^{min_degree + i}; the series is
  // known up to (excluding) degree min_degree + coeffs.size().
  LaurentSeries(long min_degree, std::vector<Rational> coeffs)
      : min_degree_(min_degree), coeffs_(std::move(coeffs)) {}

  // Polynomial (or truncated power series) starting at degree 0, declared
  // exact up to `order`. Missing coefficients below `order` are genuine
  // zeros; coefficients at or beyond `order` are dropped.
  static LaurentSeries polynomial(std::vector<Rational> coeffs, long order) {
    if (order < 0) throw DimensionError("negative series order");
    coeffs.resize(static_cast<std::size_t>(order), Rational(0));
    return LaurentSeries(0, std::move(coeffs));
  }

  // Power series sum_{m=0}^{order-1} f(m) z^m.
  static LaurentSeries generate(const std::function<Rational(long)>& f,
                                long order) {
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(std::max(order, 0L)));
    for (long m = 0; m < order; ++m) c.push_back(f(m));
    return LaurentSeries(0, std::move(c));
  }

  long min_degree() const { return min_degree_; }
  long order() const { return min_degree_ + static_cast<long>(coeffs_.size()); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  // Coefficient of z^m. Degrees below min_degree are zero; degrees at or
  // beyond order() are unknown and raise TruncationError.
  Rational coeff(long m) const {
    if (m >= order())
      throw TruncationError("coefficient of z^" + std::to_string(m) +
                            " is beyond series order " +
                            std::to_string(order()));
    if (m < min_degree_) return Rational(0);
    return coeffs_[static_cast<std::size_t>(m - min_degree_)];
  }

  // Degree of the lowest nonzero known coefficient.
  long valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return min_degree_ + static_cast<long>(i);
    throw SingularSeriesError("series is zero to its order " +
                              std::to_string(order()));
  }

  LaurentSeries truncated(long new_order) const {
    if (new_order > order())
      throw TruncationError("cannot extend series beyond its order");
    if (new_order <= min_degree_) return LaurentSeries(new_order, {});
    std::vector<Rational> c(coeffs_.begin(),
                            coeffs_.begin() + (new_order - min_degree_));
    return LaurentSeries(min_degree_, std::move(c));
  }

  // f(z) -> f(c z): coefficient m is multiplied by c^m.
  LaurentSeries rescaled(const Rational& c) const {
    LaurentSeries out = *this;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
      out.coeffs_[i] *= pow(c, min_degree_ + static_cast<long>(i));
    return out;
  }

  LaurentSeries negated_variable() const { return rescaled(Rational(-1)); }

  LaurentSeries operator-() const {
    LaurentSeries out = *this;
    for (auto& v : out.coeffs_) v = -v;
    return out;
  }

  friend LaurentSeries operator+(const LaurentSeries& a,
                                 const LaurentSeries& b) {
    return combine(a, b, 1);
  }
  friend LaurentSeries operator-(const LaurentSeries& a,
                                 const LaurentSeries& b) {
    return combine(a, b, -1);
  }
  friend LaurentSeries operator*(const Rational& s, const LaurentSeries& a) {
    LaurentSeries out = a;
    for (auto& v : out.coeffs_) v *= s;
    return out;
  }

  // Cauchy product. Coefficient m needs a_i for i <= m - b.min and b_j for
  // j <= m - a.min, so the product is known below
  // min(a.order + b.min, b.order + a.min).
  friend LaurentSeries operator*(const LaurentSeries& a,
                                 const LaurentSeries& b) {
    const long lo = a.min_degree_ + b.min_degree_;
    const long hi = std::min(a.order() + b.min_degree_, b.order() + a.min_degree_);
    std::vector<Rational> c(static_cast<std::size_t>(std::max(hi - lo, 0L)),
                            Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size() && i + j < c.size(); ++j)
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return LaurentSeries(lo, std::move(c));
  }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.min_degree_ == b.min_degree_ && a.coeffs_ == b.coeffs_;
  }

  // Laurent coefficients over the common known range agree.
  bool agrees_with(const LaurentSeries& o) const {
    const long hi = std::min(order(), o.order());
    const long lo = std::min(min_degree_, o.min_degree_);
    for (long m = lo; m < hi; ++m)
      if (coeff(m) != o.coeff(m)) return false;
    return true;
  }

 private:
  static LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b,
                               int sign) {
    const long lo = std::min(a.min_degree_, b.min_degree_);
    const long hi = std::min(a.order(), b.order());
    std::vector<Rational> c;
    for (long m = lo; m < hi; ++m) {
      Rational v = a.coeff(m);
      if (sign > 0)
        v += b.coeff(m);
      else
        v -= b.coeff(m);
      c.push_back(std::move(v));
    }
    return LaurentSeries(lo, std::move(c));
  }

  long min_degree_ = 0;
  std::vector<Rational> coeffs_;
};

// Reciprocal t with s * t = 1. If s has valuation d, t starts at degree -d
// and is known below -d + (s.order() - d); `order` must not exceed that.
inline LaurentSeries series_reciprocal(const LaurentSeries& s, long order) {
  const long d = s.valuation();
  const long max_order = -d + (s.order() - d);
  if (order > max_order)
    throw TruncationError("reciprocal requested to order " +
                          std::to_string(order) + " but input supports only " +
                          std::to_string(max_order));
  const long n = order + d;  // number of coefficients of t
  if (n <= 0) return LaurentSeries(order, {});
  const Rational lead = s.coeff(d);
  std::vector<Rational> t(static_cast<std::size_t>(n), Rational(0));
  t[0] = Rational(1) / lead;
  for (long i = 1; i < n; ++i) {
    Rational acc(0);
    for (long j = 1; j <= i; ++j) {
      const Rational& sj = s.coeff(d + j);
      if (!sj.is_zero()) acc += sj * t[static_cast<std::size_t>(i - j)];
    }
    t[static_cast<std::size_t>(i)] = -acc / lead;
  }
  return LaurentSeries(-d, std::move(t));
}

inline LaurentSeries series_reciprocal(const LaurentSeries& s) {
  const long d = s.valuation();
  return series_reciprocal(s, -d + (s.order() - d));
}

inline LaurentSeries series_multiply(const LaurentSeries& a,
                                     const LaurentSeries& b) {
  return a * b;
}

}  // namespace onedpp
