#pragma once

// Dense univariate polynomials over Q, coefficients low degree first.
// Enough for characteristic polynomials: division, gcd, squarefree
// factorization and Sturm counts.

#include <utility>
#include <vector>

#include "onedpp/error.hpp"
#include "onedpp/exact/matrix.hpp"
#include "onedpp/exact/rational.hpp"

namespace onedpp {

using Polynomial = std::vector<Rational>;

inline void trim(Polynomial& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int degree(const Polynomial& p) { return static_cast<int>(p.size()) - 1; }

inline Polynomial derivative(const Polynomial& p) {
  Polynomial d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(d);
  return d;
}

inline Polynomial monic(Polynomial p) {
  trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

// (quotient, remainder) of a by b.
inline std::pair<Polynomial, Polynomial> divide(Polynomial a, Polynomial b) {
  trim(a);
  trim(b);
  if (b.empty()) throw SingularMatrixError("polynomial division by zero");
  if (a.size() < b.size()) return {Polynomial{}, a};
  Polynomial q(a.size() - b.size() + 1, Rational(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational c = a[k + b.size() - 1] / b.back();
    q[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

inline Polynomial gcd(Polynomial a, Polynomial b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

// Yun: p = c * prod_i f_i^i with f_i squarefree and pairwise coprime.
// Entry i-1 holds f_i (possibly constant 1).
inline std::vector<Polynomial> squarefree_factors(const Polynomial& p) {
  Polynomial f = monic(p);
  if (degree(f) < 1) return {};
  std::vector<Polynomial> out;
  Polynomial a = gcd(f, derivative(f));
  Polynomial b = divide(f, a).first;
  Polynomial c = divide(derivative(f), a).first;
  Polynomial d = c;
  const Polynomial db = derivative(b);
  for (std::size_t i = 0; i < d.size() || i < db.size(); ++i) {
    if (i >= d.size()) d.push_back(Rational(0));
    if (i < db.size()) d[i] -= db[i];
  }
  trim(d);
  while (degree(b) >= 1) {
    Polynomial g = gcd(b, d);
    out.push_back(g);
    b = divide(b, g).first;
    c = divide(d, g).first;
    d = c;
    const Polynomial db2 = derivative(b);
    for (std::size_t i = 0; i < d.size() || i < db2.size(); ++i) {
      if (i >= d.size()) d.push_back(Rational(0));
      if (i < db2.size()) d[i] -= db2[i];
    }
    trim(d);
  }
  return out;
}

// Number of distinct real roots, by Sturm's theorem on (-inf, inf).
inline int real_root_count(const Polynomial& p) {
  Polynomial a = p;
  trim(a);
  if (degree(a) < 1) return 0;
  std::vector<Polynomial> chain{a, derivative(a)};
  while (!chain.back().empty()) {
    auto r = divide(chain[chain.size() - 2], chain.back()).second;
    for (auto& x : r) x = -x;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  const auto changes = [&](bool at_plus) {
    int count = 0, last = 0;
    for (const auto& q : chain) {
      int s = q.back().sign();
      if (!at_plus && degree(q) % 2 == 1) s = -s;
      if (s != 0 && last != 0 && s != last) ++count;
      if (s != 0) last = s;
    }
    return count;
  };
  return changes(false) - changes(true);
}

// det(t I - M) by exact evaluation at t = 0..d and Newton interpolation.
inline Polynomial characteristic_polynomial(const RationalMatrix& m) {
  const std::size_t d = m.rows();
  std::vector<Rational> ys;
  for (std::size_t t = 0; t <= d; ++t) {
    RationalMatrix a = Rational(-1) * m;
    for (std::size_t i = 0; i < d; ++i) a(i, i) += Rational(static_cast<long>(t));
    ys.push_back(det(a));
  }
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level <= d; ++level)
    for (std::size_t i = d; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
  Polynomial poly{dd[d]};
  for (std::size_t i = d; i-- > 0;) {
    Polynomial next(poly.size() + 1, Rational(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * Rational(static_cast<long>(i));
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  poly.resize(d + 1, Rational(0));
  return poly;
}

}  // namespace onedpp
