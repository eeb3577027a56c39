#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "onedpp/error.hpp"
#include "onedpp/exact/rational.hpp"
#include "onedpp/exact/series.hpp"

namespace onedpp {

// A coefficient sequence c_0, c_1, ... stored either to a declared finite
// length (indices beyond it are unknown) or as an exact closed form valid
// for every index. Negative indices are zero.
class CoefficientSequence {
 public:
  using Formula = std::function<Rational(long)>;

  CoefficientSequence() = default;
  explicit CoefficientSequence(std::vector<Rational> values)
      : values_(std::move(values)) {}

  static CoefficientSequence closed_form(Formula f) {
    CoefficientSequence s;
    s.formula_ = std::make_shared<const Formula>(std::move(f));
    return s;
  }

  bool is_closed_form() const { return formula_ != nullptr; }

  // One past the largest known index.
  long known_length() const {
    if (formula_) return std::numeric_limits<long>::max();
    return static_cast<long>(values_.size());
  }
  bool known(long i) const { return i < known_length(); }

  Rational at(long i) const {
    if (i < 0) return Rational(0);
    if (formula_) return (*formula_)(i);
    if (i >= static_cast<long>(values_.size()))
      throw TruncationError("coefficient " + std::to_string(i) +
                            " requested but only " +
                            std::to_string(values_.size()) + " are declared");
    return values_[static_cast<std::size_t>(i)];
  }

  std::vector<Rational> prefix(long count) const {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0L)));
    for (long i = 0; i < count; ++i) out.push_back(at(i));
    return out;
  }

  // Power series sum c_i z^i known below `order`.
  LaurentSeries series(long order) const {
    return LaurentSeries(0, prefix(order));
  }

  // Finite prefix of a closed form, or the stored values.
  CoefficientSequence materialized(long count) const {
    if (!formula_) return *this;
    return CoefficientSequence(prefix(count));
  }

 private:
  std::vector<Rational> values_;
  std::shared_ptr<const Formula> formula_;
};

}  // namespace onedpp
