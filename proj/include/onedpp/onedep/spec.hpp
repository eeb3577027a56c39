#pragma once

// Specifications of one-dependent point processes on positions 1..n-1.
//
//   StationaryA  run probabilities a_i = P(X_1 = ... = X_{i-1} = 1), a_0 = a_1 = 1
//   StationaryE  Toeplitz weights e(j) with P_n(S) = det[e(s_{j+1} - s_i)] / e(1)^n
//   TableE       weights e(i, j) on {0..n} with P_n(S) = h(n) det[e(s_i, s_{j+1})]
//   IntervalRho  interval correlations rho([x, y)) for 1 <= x < y <= n

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "onedpp/error.hpp"
#include "onedpp/exact/matrix.hpp"
#include "onedpp/exact/series.hpp"
#include "onedpp/onedep/pattern.hpp"
#include "onedpp/onedep/sequence.hpp"

namespace onedpp {

struct StationaryA {
  CoefficientSequence a;
};

struct StationaryE {
  CoefficientSequence e;
};

struct TableE {
  RationalMatrix e;  // (n+1) x (n+1), indexed by {0..n}
};

struct IntervalRho {
  std::map<std::pair<int, int>, Rational> rho;  // key (x, y) means [x, y)

  Rational operator()(int x, int y) const {
    if (x == y) return Rational(1);
    const auto it = rho.find({x, y});
    if (it == rho.end())
      throw IncompleteSpecError("missing correlation for interval [" +
                                std::to_string(x) + "," + std::to_string(y) +
                                ")");
    return it->second;
  }
};

class OneDepSpec {
 public:
  using Form = std::variant<StationaryA, StationaryE, TableE, IntervalRho>;

  static OneDepSpec stationary_a(CoefficientSequence a, int horizon,
                                 std::string label = {}) {
    check_horizon(horizon);
    if (a.at(0) != 1 || a.at(1) != 1)
      throw InvalidSpecError("run probabilities need a_0 = a_1 = 1");
    const long check = std::min<long>(a.known_length(), horizon + 1);
    for (long i = 2; i < check; ++i)
      if (a.at(i).sign() < 0)
        throw InvalidSpecError("negative run probability a_" + std::to_string(i));
    return OneDepSpec(StationaryA{std::move(a)}, horizon, std::move(label));
  }

  static OneDepSpec stationary_e(CoefficientSequence e, int horizon,
                                 std::string label = {}) {
    check_horizon(horizon);
    if (e.at(0) != 1) throw InvalidSpecError("e(0) must be 1");
    if (e.at(1).sign() <= 0) throw InvalidSpecError("e(1) must be positive");
    return OneDepSpec(StationaryE{std::move(e)}, horizon, std::move(label));
  }

  static OneDepSpec table_e(RationalMatrix e, std::string label = {}) {
    if (!e.square() || e.rows() < 2)
      throw InvalidSpecError("e-table must be (n+1)x(n+1) with n >= 1");
    const int n = static_cast<int>(e.rows()) - 1;
    for (int i = 0; i <= n; ++i) {
      if (e(i, i) != 1) throw InvalidSpecError("e(i,i) must be 1");
      if (i < n && e(i, i + 1).sign() <= 0)
        throw SingularMatrixError("e(" + std::to_string(i) + "," +
                                  std::to_string(i + 1) + ") must be positive");
      for (int j = 0; j < i; ++j)
        if (!e(i, j).is_zero()) throw InvalidSpecError("e(i,j) must vanish for i > j");
    }
    return OneDepSpec(TableE{std::move(e)}, n, std::move(label));
  }

  static OneDepSpec interval_rho(IntervalRho rho, int horizon,
                                 std::string label = {}) {
    check_horizon(horizon);
    for (const auto& [key, value] : rho.rho) {
      if (key.first < 1 || key.second > horizon || key.first >= key.second)
        throw InvalidSpecError("interval outside the horizon");
      if (value.sign() < 0) throw InvalidSpecError("negative correlation");
    }
    return OneDepSpec(std::move(rho), horizon, std::move(label));
  }

  const Form& form() const { return form_; }
  int horizon() const { return horizon_; }
  const std::string& label() const { return label_; }
  bool is_stationary() const {
    return std::holds_alternative<StationaryA>(form_) ||
           std::holds_alternative<StationaryE>(form_);
  }
  std::string variant_name() const {
    static const char* names[] = {"StationaryA", "StationaryE", "TableE",
                                  "IntervalRho"};
    return names[form_.index()];
  }

  // Same stationary law viewed on another horizon.
  OneDepSpec with_horizon(int horizon) const {
    if (!is_stationary())
      throw ParameterError("only stationary specs can change horizon");
    check_horizon(horizon);
    OneDepSpec s = *this;
    s.horizon_ = horizon;
    return s;
  }

  OneDepSpec with_label(std::string label) const {
    OneDepSpec s = *this;
    s.label_ = std::move(label);
    return s;
  }

 private:
  OneDepSpec(Form form, int horizon, std::string label)
      : form_(std::move(form)), horizon_(horizon), label_(std::move(label)) {}

  static void check_horizon(int horizon) {
    if (horizon < 1) throw ParameterError("horizon must be >= 1");
  }

  Form form_;
  int horizon_ = 1;
  std::string label_;
};

// a_j = [z^j](1/e^(z)) / (-e(1))^j, the run probabilities of the process
// with Toeplitz weights e. Only the first `count` values are produced.
inline std::vector<Rational> run_probabilities_from_e(
    const CoefficientSequence& e, long count) {
  const LaurentSeries inv = series_reciprocal(e.series(count), count);
  const Rational c = -e.at(1);
  std::vector<Rational> a;
  a.reserve(static_cast<std::size_t>(count));
  Rational scale(1);
  for (long j = 0; j < count; ++j) {
    a.push_back(inv.coeff(j) / scale);
    scale *= c;
  }
  return a;
}

// Toeplitz weights with e(1) = 1 reproducing run probabilities a:
// e^(z) = 1 / sum_j a_j (-z)^j.
inline std::vector<Rational> e_from_run_probabilities(
    const CoefficientSequence& a, long count) {
  const LaurentSeries inv =
      series_reciprocal(a.series(count).negated_variable(), count);
  std::vector<Rational> e;
  e.reserve(static_cast<std::size_t>(count));
  for (long j = 0; j < count; ++j) e.push_back(inv.coeff(j));
  return e;
}

// a_0 .. a_{count-1} for a stationary spec.
inline std::vector<Rational> run_probabilities(const OneDepSpec& spec,
                                               long count) {
  if (const auto* a = std::get_if<StationaryA>(&spec.form()))
    return a->a.prefix(count);
  if (const auto* e = std::get_if<StationaryE>(&spec.form()))
    return run_probabilities_from_e(e->e, count);
  throw ParameterError("run probabilities need a stationary spec");
}

// Stationary spec in run-probability form, materialized to its horizon.
inline OneDepSpec to_run_form(const OneDepSpec& spec) {
  if (std::holds_alternative<StationaryA>(spec.form())) return spec;
  const long count = std::min<long>(
      spec.horizon() + 1, std::get<StationaryE>(spec.form()).e.known_length());
  return OneDepSpec::stationary_a(
      CoefficientSequence(run_probabilities(spec, count)),
      spec.horizon(), spec.label());
}

// Stationary spec in Toeplitz-weight form with e(1) = 1.
inline OneDepSpec to_weight_form(const OneDepSpec& spec) {
  if (std::holds_alternative<StationaryE>(spec.form())) return spec;
  const auto& a = std::get<StationaryA>(spec.form()).a;
  const long count = std::min<long>(spec.horizon() + 1, a.known_length());
  return OneDepSpec::stationary_e(
      CoefficientSequence(e_from_run_probabilities(a, count)),
      spec.horizon(), spec.label());
}

}  // namespace onedpp
