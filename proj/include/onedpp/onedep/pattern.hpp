#pragma once

// Binary patterns t_1 ... t_{n-1} on the positions {1, ..., n-1} of a
// process with horizon n, and the two subset views of a pattern.
//
// The Toeplitz-minor formula in run-probability form is indexed by the
// zeros of a pattern, while the e-table form is indexed by its occupied
// sites. The tagged ZeroSet / SupportSet types keep the two from being
// mixed up.

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "onedpp/error.hpp"

namespace onedpp {

using PositionSet = std::vector<int>;  // sorted, distinct

class Pattern {
 public:
  Pattern() = default;
  // All-zero pattern of the given horizon.
  explicit Pattern(int horizon) : horizon_(horizon) {
    if (horizon < 1) throw ParameterError("pattern horizon must be >= 1");
    bits_.assign(static_cast<std::size_t>(horizon - 1), 0);
  }

  // "1000100" -> t_1 = 1, t_5 = 1, horizon 8.
  static Pattern from_bits(std::string_view bits) {
    Pattern p(static_cast<int>(bits.size()) + 1);
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] != '0' && bits[i] != '1')
        throw ParameterError("pattern must be a 0/1 string");
      p.bits_[i] = bits[i] == '1';
    }
    return p;
  }

  static Pattern from_ones(int horizon, const PositionSet& ones) {
    Pattern p(horizon);
    for (int s : ones) {
      if (s < 1 || s > horizon - 1)
        throw ParameterError("position " + std::to_string(s) +
                             " outside 1.." + std::to_string(horizon - 1));
      p.bits_[static_cast<std::size_t>(s - 1)] = 1;
    }
    return p;
  }

  // Bit (i-1) of mask is t_i.
  static Pattern from_mask(int horizon, std::uint64_t mask) {
    Pattern p(horizon);
    for (int i = 0; i < horizon - 1; ++i) p.bits_[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
    return p;
  }

  int horizon() const { return horizon_; }
  int length() const { return horizon_ - 1; }
  bool operator[](int position) const {
    return bits_[static_cast<std::size_t>(position - 1)] != 0;
  }

  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) m |= std::uint64_t{1} << i;
    return m;
  }

  PositionSet ones() const { return positions(1); }
  PositionSet zeros() const { return positions(0); }
  int count() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1)); }

  Pattern reversed() const {
    Pattern r = *this;
    std::reverse(r.bits_.begin(), r.bits_.end());
    return r;
  }

  std::string str() const {
    std::string s;
    for (auto b : bits_) s.push_back(b ? '1' : '0');
    return s;
  }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  PositionSet positions(std::uint8_t value) const {
    PositionSet out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] == value) out.push_back(static_cast<int>(i) + 1);
    return out;
  }

  int horizon_ = 1;
  std::vector<std::uint8_t> bits_;
};

// Positions of the zeros of a pattern, with the horizon n.
struct ZeroSet {
  int horizon;
  PositionSet positions;
};

// Positions of the ones (occupied sites) of a pattern, with the horizon n.
struct SupportSet {
  int horizon;
  PositionSet positions;
};

inline ZeroSet zeros_of(const Pattern& p) { return {p.horizon(), p.zeros()}; }
inline SupportSet support_of(const Pattern& p) { return {p.horizon(), p.ones()}; }

inline std::uint64_t pattern_count(int horizon) {
  return std::uint64_t{1} << (horizon - 1);
}

// Maximal runs of consecutive integers in a sorted set.
inline std::vector<PositionSet> consecutive_blocks(const PositionSet& set) {
  std::vector<PositionSet> blocks;
  for (int x : set) {
    if (blocks.empty() || blocks.back().back() + 1 != x) blocks.emplace_back();
    blocks.back().push_back(x);
  }
  return blocks;
}

inline std::string format_positions(const PositionSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace onedpp
