#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "onedpp/error.hpp"
#include "onedpp/exact/matrix.hpp"
#include "onedpp/onedep/kernel.hpp"
#include "onedpp/onedep/pattern.hpp"
#include "onedpp/onedep/spec.hpp"

namespace onedpp {

// Toeplitz-minor formula: with zeros s_1 < ... < s_k, s_0 = 0, s_{k+1} = n,
// P = det(a_{s_{j+1} - s_i})_{i,j=0}^k where a_0 = 1 and a_i = 0 for i < 0.
inline Rational probability_from_zeros(std::span<const Rational> a,
                                       const ZeroSet& zeros) {
  const int n = zeros.horizon;
  if (static_cast<int>(a.size()) < n + 1)
    throw TruncationError("need run probabilities a_0..a_" + std::to_string(n));
  std::vector<int> s{0};
  s.insert(s.end(), zeros.positions.begin(), zeros.positions.end());
  s.push_back(n);
  const std::size_t k1 = s.size() - 1;
  RationalMatrix m(k1, k1);
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t j = 0; j < k1; ++j) {
      const int d = s[j + 1] - s[i];
      if (d >= 0) m(i, j) = a[static_cast<std::size_t>(d)];
    }
  return det(m);
}

// Occupied-site formula for Toeplitz weights:
// P_n(S) = det[e(s_{j+1} - s_i)] / e(1)^n.
inline Rational probability_from_support(std::span<const Rational> e,
                                         const SupportSet& support) {
  const int n = support.horizon;
  if (static_cast<int>(e.size()) < n + 1)
    throw TruncationError("need weights e(0)..e(" + std::to_string(n) + ")");
  std::vector<int> s{0};
  s.insert(s.end(), support.positions.begin(), support.positions.end());
  s.push_back(n);
  const std::size_t k1 = s.size() - 1;
  RationalMatrix m(k1, k1);
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t j = 0; j < k1; ++j) {
      const int d = s[j + 1] - s[i];
      if (d >= 0) m(i, j) = e[static_cast<std::size_t>(d)];
    }
  return det(m) / pow(e[1], n);
}

// Occupied-site formula for an e-table: P_n(S) = h(n) det[e(s_i, s_{j+1})].
inline Rational probability_from_support(const RationalMatrix& table,
                                         const SupportSet& support) {
  const int n = support.horizon;
  if (static_cast<int>(table.rows()) != n + 1)
    throw DimensionError("e-table does not match the horizon");
  std::vector<int> s{0};
  s.insert(s.end(), support.positions.begin(), support.positions.end());
  s.push_back(n);
  const std::size_t k1 = s.size() - 1;
  RationalMatrix m(k1, k1);
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t j = 0; j < k1; ++j)
      m(i, j) = table(static_cast<std::size_t>(s[i]), static_cast<std::size_t>(s[j + 1]));
  Rational h(1);
  for (int i = 0; i < n; ++i) h *= table(i, i + 1);
  return det(m) / h;
}

namespace detail {

inline void require_horizon(const OneDepSpec& spec, const Pattern& p) {
  if (p.horizon() != spec.horizon())
    throw DimensionError("pattern of length " + std::to_string(p.length()) +
                         " does not fit horizon " + std::to_string(spec.horizon()));
}

inline Rational checked(Rational p, const Pattern& pattern) {
  if (p.sign() < 0)
    throw InvalidSpecError("negative probability " + p.str() + " for pattern " +
                           pattern.str());
  return p;
}

// Evaluates every pattern with one shared preparation step.
class PatternEvaluator {
 public:
  explicit PatternEvaluator(const OneDepSpec& spec) : spec_(spec) {
    const long need = spec.horizon() + 1;
    if (const auto* a = std::get_if<StationaryA>(&spec.form())) {
      a_ = a->a.prefix(need);
    } else if (const auto* e = std::get_if<StationaryE>(&spec.form())) {
      e_ = e->e.prefix(need);
    } else if (std::holds_alternative<IntervalRho>(spec.form())) {
      kernel_ = kernel_general(spec);
    }
  }

  Rational operator()(const Pattern& p) const {
    switch (spec_.form().index()) {
      case 0:
        return probability_from_zeros(a_, zeros_of(p));
      case 1:
        return probability_from_support(e_, support_of(p));
      case 2:
        return probability_from_support(std::get<TableE>(spec_.form()).e,
                                        support_of(p));
      default:
        return pattern_probability_from_kernel(kernel_, p);
    }
  }

 private:
  const OneDepSpec& spec_;
  std::vector<Rational> a_, e_;
  DenseKernel kernel_;
};

}  // namespace detail

// Exact probability of the pattern t_1..t_{n-1}. Run-probability specs use
// the zeros of the pattern, weight specs its occupied sites.
inline Rational pattern_probability(const OneDepSpec& spec,
                                    const Pattern& pattern) {
  detail::require_horizon(spec, pattern);
  return detail::checked(detail::PatternEvaluator(spec)(pattern), pattern);
}

// All 2^{n-1} pattern probabilities, indexed by Pattern::mask().
inline std::vector<Rational> pattern_distribution(const OneDepSpec& spec) {
  const detail::PatternEvaluator eval(spec);
  const std::uint64_t count = pattern_count(spec.horizon());
  std::vector<Rational> out;
  out.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) {
    const Pattern p = Pattern::from_mask(spec.horizon(), m);
    out.push_back(detail::checked(eval(p), p));
  }
  return out;
}

// rho(A) = P{S contains A}.
inline Rational correlation(const OneDepSpec& spec, const PositionSet& set) {
  for (int x : set)
    if (x < 1 || x > spec.horizon() - 1)
      throw ParameterError("position " + std::to_string(x) + " outside 1.." +
                           std::to_string(spec.horizon() - 1));
  if (set.empty()) return Rational(1);
  const auto blocks = consecutive_blocks(set);
  if (spec.is_stationary()) {
    std::size_t longest = 0;
    for (const auto& b : blocks) longest = std::max(longest, b.size());
    const auto a = run_probabilities(spec, static_cast<long>(longest) + 2);
    Rational out(1);
    for (const auto& b : blocks) out *= a[b.size() + 1];
    return out;
  }
  if (const auto* rho = std::get_if<IntervalRho>(&spec.form())) {
    Rational out(1);
    for (const auto& b : blocks) out *= (*rho)(b.front(), b.back() + 1);
    return out;
  }
  return kernel_from_E(spec).kernel.minor(set);
}

struct ValidationFailure {
  int horizon;
  Pattern pattern;
  Rational value;
};

struct ValidationReport {
  bool ok = true;
  std::uint64_t checked = 0;
  std::vector<ValidationFailure> failures;
  std::string note;  // set when the spec could not be evaluated
};

// Evaluates every pattern determinant for horizons 2..max_n (the spec's own
// horizon for non-stationary forms) and records the negative ones.
inline ValidationReport validate_spec(const OneDepSpec& spec, int max_n) {
  ValidationReport report;
  std::vector<int> horizons;
  if (spec.is_stationary()) {
    for (int n = 2; n <= max_n; ++n) horizons.push_back(n);
  } else {
    horizons.push_back(spec.horizon());
  }
  try {
    for (int n : horizons) {
      const OneDepSpec s = spec.is_stationary() ? spec.with_horizon(n) : spec;
      const detail::PatternEvaluator eval(s);
      for (std::uint64_t m = 0; m < pattern_count(n); ++m) {
        const Pattern p = Pattern::from_mask(n, m);
        Rational v = eval(p);
        ++report.checked;
        if (v.sign() < 0) {
          report.ok = false;
          report.failures.push_back({n, p, std::move(v)});
        }
      }
    }
  } catch (const Error& e) {
    report.ok = false;
    report.note = e.what();
  }
  return report;
}

}  // namespace onedpp
