#pragma once

// Specialized symmetric functions: elementary and complete homogeneous
// polynomials of a probability vector, ribbon shapes of a pattern, and the
// dual Jacobi-Trudi determinant s_{lambda'/mu'} = det(e_{lambda_i - mu_j - i + j}).
//
// Symmetric functions appear only through their specializations, as lists
// of rationals indexed by degree.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "onedpp/error.hpp"
#include "onedpp/exact/matrix.hpp"
#include "onedpp/onedep/pattern.hpp"

namespace onedpp {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw ParameterError("negative partition part");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw ParameterError("partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  // Part i (1-based); zero past the stored length.
  int operator[](std::size_t i) const {
    return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0;
  }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  bool contains(const Partition& mu) const {
    const std::size_t len = std::max(length(), mu.length());
    for (std::size_t i = 1; i <= len; ++i)
      if (mu[i] > (*this)[i]) return false;
    return true;
  }
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct SkewShape {
  Partition outer;  // lambda
  Partition inner;  // mu
};

// lambda_i = n - s_{i-1} - k + i - 1 and mu_i = n - s_i - k + i - 1 for
// 1 <= i <= k+1, with s_0 = 0, s_{k+1} = n.
inline SkewShape ribbon_shape(int n, const PositionSet& s) {
  for (int x : s)
    if (x < 1 || x > n - 1)
      throw ParameterError("position " + std::to_string(x) + " outside 1.." +
                           std::to_string(n - 1));
  const int k = static_cast<int>(s.size());
  std::vector<int> pos{0};
  pos.insert(pos.end(), s.begin(), s.end());
  pos.push_back(n);
  std::vector<int> lambda, mu;
  for (int i = 1; i <= k + 1; ++i) {
    lambda.push_back(n - pos[static_cast<std::size_t>(i - 1)] - k + i - 1);
    mu.push_back(n - pos[static_cast<std::size_t>(i)] - k + i - 1);
  }
  return {Partition(std::move(lambda)), Partition(std::move(mu))};
}

// det(e_{lambda_i - mu_j - i + j})_{i,j=1}^{l} with e_0 = 1, e_r = 0 for r < 0.
inline Rational skew_schur_specialized(const Partition& lambda,
                                       const Partition& mu,
                                       std::span<const Rational> evalues) {
  if (!lambda.contains(mu)) throw ParameterError("mu is not contained in lambda");
  const std::size_t l = std::max(lambda.length(), mu.length());
  RationalMatrix m(l, l);
  for (std::size_t i = 1; i <= l; ++i)
    for (std::size_t j = 1; j <= l; ++j) {
      const long r = static_cast<long>(lambda[i]) - mu[j] - static_cast<long>(i) +
                     static_cast<long>(j);
      if (r < 0) continue;
      if (r == 0) {
        m(i - 1, j - 1) = 1;
        continue;
      }
      if (r >= static_cast<long>(evalues.size()))
        throw TruncationError("missing specialization for e_" + std::to_string(r));
      m(i - 1, j - 1) = evalues[static_cast<std::size_t>(r)];
    }
  return det(m);
}

inline Rational skew_schur_specialized(const SkewShape& shape,
                                       std::span<const Rational> evalues) {
  return skew_schur_specialized(shape.outer, shape.inner, evalues);
}

struct SymmetricValues {
  std::vector<Rational> elementary;  // e_0 .. e_max
  std::vector<Rational> complete;    // h_0 .. h_max
};

// e_r(p) and h_r(p) for r = 0..max_degree, by adding one variable at a time.
inline SymmetricValues symmetric_polys(std::span<const Rational> p, int max_degree) {
  const auto len = static_cast<std::size_t>(max_degree + 1);
  SymmetricValues out{std::vector<Rational>(len, Rational(0)),
                      std::vector<Rational>(len, Rational(0))};
  out.elementary[0] = 1;
  out.complete[0] = 1;
  for (const Rational& x : p) {
    for (std::size_t r = len - 1; r >= 1; --r)
      out.elementary[r] += x * out.elementary[r - 1];
    for (std::size_t r = 1; r < len; ++r) out.complete[r] += x * out.complete[r - 1];
  }
  return out;
}

}  // namespace onedpp
