#pragma once

// Exact discrete sampling from a seeded 64-bit engine.

#include <cstdint>
#include <random>
#include <vector>

#include "onedpp/error.hpp"
#include "onedpp/exact/rational.hpp"

namespace onedpp {

// Uniform integer in [0, bound) by rejection on whole 64-bit words.
inline Integer uniform_below(const Integer& bound, std::mt19937_64& rng) {
  if (bound <= 0) throw ParameterError("bound must be positive");
  if (bound.fits_ulong_p()) {
    const unsigned long b = bound.get_ui();
    std::uniform_int_distribution<std::uint64_t> pick(0, b - 1);
    return Integer(pick(rng));
  }
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const std::size_t excess = words * 64 - bits;
  while (true) {
    Integer v(0);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t x = rng();
      if (w == 0 && excess) x >>= excess;
      v <<= 64;
      v += Integer(static_cast<unsigned long>(x));
    }
    if (v < bound) return v;
  }
}

// Index i with probability weights[i] / sum(weights).
inline std::size_t pick_weighted(const std::vector<Integer>& weights, std::mt19937_64& rng) {
  Integer total(0);
  for (const auto& w : weights) {
    if (w < 0) throw ParameterError("negative weight");
    total += w;
  }
  const Integer u = uniform_below(total, rng);
  Integer acc(0);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return i;
  }
  return weights.size() - 1;
}

}  // namespace onedpp
