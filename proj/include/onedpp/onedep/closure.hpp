#pragma once

// Particle-hole involution, intersections and unions of independent
// one-dependent processes.

#include <algorithm>
#include <span>
#include <variant>
#include <vector>

#include "onedpp/error.hpp"
#include "onedpp/onedep/kernel.hpp"
#include "onedpp/onedep/process.hpp"
#include "onedpp/onedep/spec.hpp"

namespace onedpp {

// Caller's statement about the joint law of the processes being combined.
enum class Independence { unspecified, independent };

// Whole-line involution of a stationary spec: R(z) -> 1/R(-z), where
// R(z) = sum_j a_j z^j is the run-probability series.
inline OneDepSpec particle_hole(const OneDepSpec& spec) {
  if (!spec.is_stationary())
    throw ParameterError("whole-line particle-hole needs a stationary spec; "
                         "pass a region instead");
  long count = spec.horizon() + 1;
  if (const auto* e = std::get_if<StationaryE>(&spec.form()))
    count = std::min(count, e->e.known_length());
  if (const auto* a = std::get_if<StationaryA>(&spec.form()))
    count = std::min(count, a->a.known_length());
  const LaurentSeries r(0, run_probabilities(spec, count));
  const LaurentSeries flipped = series_reciprocal(r.negated_variable(), count);
  return OneDepSpec::stationary_a(CoefficientSequence(flipped.coefficients()),
                                  spec.horizon(), spec.label());
}

// Complementation on a region N: rows of positions in N become
// delta - K, other rows are unchanged.
inline DenseKernel particle_hole(const DenseKernel& k, const PositionSet& region) {
  RationalMatrix m = k.matrix();
  for (int x : region) {
    const std::size_t i = k.index(x);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      m(i, j) = -m(i, j);
      if (i == j) m(i, j) += 1;
    }
  }
  return DenseKernel(std::move(m), k.first_position());
}

// Interval correlations read off the minors of a kernel on 1..n-1.
inline IntervalRho interval_rho_from_kernel(const DenseKernel& k, int horizon) {
  IntervalRho rho;
  for (int x = 1; x < horizon; ++x) {
    PositionSet block;
    for (int y = x + 1; y <= horizon; ++y) {
      block.push_back(y - 1);
      rho.rho[{x, y}] = k.minor(block);
    }
  }
  return rho;
}

inline PositionSet all_positions(int horizon) {
  PositionSet out;
  for (int x = 1; x < horizon; ++x) out.push_back(x);
  return out;
}

// Involution on an arbitrary region of the horizon. Stationary specs with
// the full region stay stationary; anything else comes back as interval
// correlations of the transformed kernel.
inline OneDepSpec particle_hole(const OneDepSpec& spec, const PositionSet& region) {
  if (spec.is_stationary() && region == all_positions(spec.horizon()))
    return particle_hole(spec);
  const DenseKernel flipped = particle_hole(dense_kernel(spec), region);
  return OneDepSpec::interval_rho(interval_rho_from_kernel(flipped, spec.horizon()),
                                  spec.horizon(), spec.label());
}

inline OneDepSpec intersect(std::span<const OneDepSpec> specs,
                            Independence independence) {
  if (independence != Independence::independent)
    throw ParameterError("intersection requires independent processes");
  if (specs.empty()) throw ParameterError("nothing to intersect");
  const int n = specs.front().horizon();
  for (const auto& s : specs)
    if (s.horizon() != n) throw DimensionError("mismatched horizons");

  const bool stationary = std::all_of(specs.begin(), specs.end(),
                                      [](const OneDepSpec& s) { return s.is_stationary(); });
  if (stationary) {
    long count = n + 1;
    for (const auto& s : specs) {
      if (const auto* a = std::get_if<StationaryA>(&s.form()))
        count = std::min(count, a->a.known_length());
      else
        count = std::min(count, std::get<StationaryE>(s.form()).e.known_length());
    }
    std::vector<Rational> a(static_cast<std::size_t>(count), Rational(1));
    for (const auto& s : specs) {
      const auto as = run_probabilities(s, count);
      for (long j = 0; j < count; ++j) a[static_cast<std::size_t>(j)] *= as[static_cast<std::size_t>(j)];
    }
    return OneDepSpec::stationary_a(CoefficientSequence(std::move(a)), n);
  }

  IntervalRho rho;
  for (int x = 1; x < n; ++x) {
    PositionSet block;
    for (int y = x + 1; y <= n; ++y) {
      block.push_back(y - 1);
      Rational v(1);
      for (const auto& s : specs) v *= correlation(s, block);
      rho.rho[{x, y}] = v;
    }
  }
  return OneDepSpec::interval_rho(std::move(rho), n);
}

// Union = particle-hole of the intersection of particle-holes.
inline OneDepSpec unite(std::span<const OneDepSpec> specs,
                        Independence independence) {
  if (specs.empty()) throw ParameterError("nothing to unite");
  std::vector<OneDepSpec> flipped;
  flipped.reserve(specs.size());
  const PositionSet all = all_positions(specs.front().horizon());
  for (const auto& s : specs) flipped.push_back(particle_hole(s, all));
  return particle_hole(intersect(flipped, independence), all);
}

}  // namespace onedpp
