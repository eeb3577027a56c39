#pragma once

// Exact rational numbers backed by GMP. Values are kept canonical
// (lowest terms, positive denominator) after every operation.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "onedpp/error.hpp"

namespace onedpp {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) : q_(Integer(std::to_string(v))) {}  // NOLINT
  Rational(unsigned v) : q_(static_cast<unsigned long>(v)) {}  // NOLINT
  Rational(unsigned long v) : q_(v) {}  // NOLINT
  Rational(const Integer& v) : q_(v) {}  // NOLINT
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error("Rational: zero denominator");
    q_.get_num() = num;
    q_.get_den() = den;
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
  Rational(int num, int den) : Rational(Integer(num), Integer(den)) {}

  // Parses "n", "-n", "n/d" (whitespace not allowed).
  static Rational parse(std::string_view text) {
    if (text.empty()) throw Error("Rational: empty string");
    const auto slash = text.find('/');
    try {
      if (slash == std::string_view::npos) {
        return Rational(Integer(std::string(text), 10));
      }
      return Rational(Integer(std::string(text.substr(0, slash)), 10),
                      Integer(std::string(text.substr(slash + 1)), 10));
    } catch (const std::invalid_argument&) {
      throw Error("Rational: cannot parse '" + std::string(text) + "'");
    }
  }

  const Integer& num() const { return q_.get_num(); }
  const Integer& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  // "num/den", or just "num" for integers.
  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class q_{0};
};

inline Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(),
             static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

// Binomial coefficient; zero when k < 0 or k > n (n >= 0).
inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

// q-integer [i]_q = 1 + q + ... + q^{i-1}.
inline Rational q_integer(const Rational& q, long i) {
  Rational sum(0), term(1);
  for (long j = 0; j < i; ++j) {
    sum += term;
    term *= q;
  }
  return sum;
}

// q-factorial n!_q = prod_{i=1}^n [i]_q. Equals n! at q = 1.
inline Rational q_factorial(const Rational& q, long n) {
  Rational out(1);
  for (long i = 1; i <= n; ++i) out *= q_integer(q, i);
  return out;
}

}  // namespace onedpp
