#pragma once

// Named constructors for the concrete one-dependent processes: carries,
// descent processes of several permutation and sequence models, unions of
// descent sets, relation-descent processes and generic-points processes.

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "onedpp/error.hpp"
#include "onedpp/exact/matrix.hpp"
#include "onedpp/exact/rational.hpp"
#include "onedpp/exact/series.hpp"
#include "onedpp/onedep/kernel.hpp"
#include "onedpp/onedep/sequence.hpp"
#include "onedpp/onedep/spec.hpp"
#include "onedpp/symfunc.hpp"

namespace onedpp {

struct CarriesBaseB {
  int b = 10;
};
struct UniformDescents {};
struct MallowsDescents {
  Rational q;
};
// Descents B_i > B_{i+1} of i.i.d. letters 0..b-1 with law p.
struct IidTrials {
  std::vector<Rational> p;
};
// Ordinary descent at odd i, ascent at even i.
struct AlternatingDescents {};
struct TypeBDescents {
  int n = 3;
};
// Union of the descent sets of r independent Mallows(q) permutations.
struct BinomialPosetUnion {
  Rational q;
  int r = 2;
};
// X_i = 1 iff (Y_i, Y_{i+1}) is not in R, Y_i i.i.d. with law theta.
struct BrentiRelation {
  std::vector<std::vector<bool>> relation;
  std::vector<Rational> theta;
};
struct GenericPoints {
  int n = 1;
};

using ProcessName =
    std::variant<CarriesBaseB, UniformDescents, MallowsDescents, IidTrials,
                 AlternatingDescents, TypeBDescents, BinomialPosetUnion,
                 BrentiRelation, GenericPoints>;

namespace detail {

inline void require_probability_vector(const std::vector<Rational>& p,
                                       const char* what) {
  if (p.empty()) throw ParameterError(std::string(what) + " is empty");
  Rational total(0);
  for (const auto& x : p) {
    if (x.sign() < 0) throw ParameterError(std::string(what) + " has a negative entry");
    total += x;
  }
  if (total != 1) throw ParameterError(std::string(what) + " must sum to 1");
}

inline void require_unit_q(const Rational& q) {
  if (q.sign() <= 0 || q > 1) throw ParameterError("q must satisfy 0 < q <= 1");
}

}  // namespace detail

inline void validate(const ProcessName& name) {
  std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, CarriesBaseB>) {
          if (m.b < 2) throw ParameterError("base must be >= 2");
        } else if constexpr (std::is_same_v<T, MallowsDescents>) {
          detail::require_unit_q(m.q);
        } else if constexpr (std::is_same_v<T, IidTrials>) {
          detail::require_probability_vector(m.p, "p");
        } else if constexpr (std::is_same_v<T, TypeBDescents>) {
          if (m.n < 1) throw ParameterError("type B needs n >= 1");
        } else if constexpr (std::is_same_v<T, BinomialPosetUnion>) {
          detail::require_unit_q(m.q);
          if (m.r < 1) throw ParameterError("r must be >= 1");
        } else if constexpr (std::is_same_v<T, BrentiRelation>) {
          detail::require_probability_vector(m.theta, "theta");
          if (m.relation.size() != m.theta.size())
            throw ParameterError("relation must be N x N for N = |theta|");
          for (const auto& row : m.relation)
            if (row.size() != m.theta.size())
              throw ParameterError("relation must be N x N for N = |theta|");
        } else if constexpr (std::is_same_v<T, GenericPoints>) {
          if (m.n < 1) throw ParameterError("generic points need n >= 1");
        }
      },
      name);
}

// E_0, E_1, ... from tan z + sec z = (1 + sin z) / cos z.
inline std::vector<Rational> euler_numbers(long count) {
  if (count < 1) throw ParameterError("count must be >= 1");
  const auto numer = LaurentSeries::generate(
      [](long j) -> Rational {
        if (j == 0) return Rational(1);
        if (j % 2 == 0) return Rational(0);
        const Rational inv(Integer(1), factorial(static_cast<unsigned long>(j)));
        return (j / 2) % 2 ? -inv : inv;
      },
      count);
  const auto cos_series = LaurentSeries::generate(
      [](long j) -> Rational {
        if (j % 2) return Rational(0);
        const Rational inv(Integer(1), factorial(static_cast<unsigned long>(j)));
        return (j / 2) % 2 ? -inv : inv;
      },
      count);
  const LaurentSeries egf = numer * series_reciprocal(cos_series, count);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long j = 0; j < count; ++j)
    out.push_back(egf.coeff(j) * Rational(factorial(static_cast<unsigned long>(j))));
  return out;
}

// Laurent expansion of 1 / (1 - e^z): k(m) = -B_{m+1} / (m+1)! for
// m = -1 .. count - 2, so k(-1) = -1, k(0) = 1/2, k(1) = -1/12.
inline StationaryKernel bernoulli_kernel(long count) {
  if (count < 1) throw ParameterError("count must be >= 1");
  const long need = count + 1;
  const auto denom = LaurentSeries::generate(
      [](long j) -> Rational {
        if (j == 0) return Rational(0);
        return -Rational(Integer(1), factorial(static_cast<unsigned long>(j)));
      },
      need);
  return StationaryKernel(series_reciprocal(denom, count - 1));
}

// h^R_j = theta^T M^{j-1} 1 with M(a, b) = [(a, b) in R] theta_b.
inline std::vector<Rational> relation_weights(const BrentiRelation& m, long count) {
  const std::size_t N = m.theta.size();
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<Rational> v = m.theta;  // mass of paths ending at each letter
  for (long j = 0; j < count; ++j) {
    if (j == 0) {
      out.emplace_back(1);
      continue;
    }
    if (j > 1) {
      std::vector<Rational> next(N, Rational(0));
      for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
          if (m.relation[a][b]) next[b] += v[a] * m.theta[b];
      v = std::move(next);
    }
    Rational total(0);
    for (const auto& x : v) total += x;
    out.push_back(std::move(total));
  }
  return out;
}

// The relation [i <= j] that turns relation descents into ordinary ones.
inline std::vector<std::vector<bool>> weak_order_relation(std::size_t N) {
  std::vector<std::vector<bool>> r(N, std::vector<bool>(N, false));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) r[i][j] = true;
  return r;
}

// e-table on {0..n+1} for descents of a uniform signed permutation in B_n;
// the process lives on positions 1..n.
inline RationalMatrix type_b_table(int n) {
  const auto size = static_cast<std::size_t>(n + 2);
  RationalMatrix e(size, size);
  for (int i = 0; i <= n + 1; ++i)
    for (int j = i; j <= n + 1; ++j) {
      if (j <= n) {
        e(i, j) = Rational(Integer(1), factorial(static_cast<unsigned long>(j - i)));
      } else {
        const int d = n - i;
        e(i, j) = d < 0 ? Rational(1)
                        : Rational(Integer(1), factorial(static_cast<unsigned long>(d)) *
                                                   (Integer(1) << d));
      }
    }
  return e;
}

inline std::string format(const ProcessName& name);

inline OneDepSpec build(const ProcessName& name, int horizon) {
  validate(name);
  const std::string label = format(name);
  const long count = horizon + 1;
  return std::visit(
      [&](const auto& m) -> OneDepSpec {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, CarriesBaseB>) {
          const int b = m.b;
          return OneDepSpec::stationary_e(
              CoefficientSequence::closed_form(
                  [b](long j) { return Rational(binomial(j + b - 1, b - 1)); }),
              horizon, label);
        } else if constexpr (std::is_same_v<T, UniformDescents>) {
          return OneDepSpec::stationary_e(
              CoefficientSequence::closed_form([](long j) {
                return Rational(Integer(1), factorial(static_cast<unsigned long>(j)));
              }),
              horizon, label);
        } else if constexpr (std::is_same_v<T, MallowsDescents>) {
          const Rational q = m.q;
          return OneDepSpec::stationary_e(
              CoefficientSequence::closed_form(
                  [q](long j) { return Rational(1) / q_factorial(q, j); }),
              horizon, label);
        } else if constexpr (std::is_same_v<T, IidTrials>) {
          auto values = symmetric_polys(m.p, horizon).complete;
          return OneDepSpec::stationary_e(CoefficientSequence(std::move(values)),
                                          horizon, label);
        } else if constexpr (std::is_same_v<T, AlternatingDescents>) {
          auto values = euler_numbers(count);
          for (long j = 0; j < count; ++j)
            values[static_cast<std::size_t>(j)] /=
                Rational(factorial(static_cast<unsigned long>(j)));
          return OneDepSpec::stationary_e(CoefficientSequence(std::move(values)),
                                          horizon, label);
        } else if constexpr (std::is_same_v<T, TypeBDescents>) {
          if (horizon != m.n + 1)
            throw ParameterError("type B descents of B_" + std::to_string(m.n) +
                                 " live on horizon " + std::to_string(m.n + 1));
          return OneDepSpec::table_e(type_b_table(m.n), label);
        } else if constexpr (std::is_same_v<T, BinomialPosetUnion>) {
          const Rational q = m.q;
          const int r = m.r;
          return OneDepSpec::stationary_e(
              CoefficientSequence::closed_form(
                  [q, r](long j) { return Rational(1) / pow(q_factorial(q, j), r); }),
              horizon, label);
        } else if constexpr (std::is_same_v<T, BrentiRelation>) {
          return OneDepSpec::stationary_e(
              CoefficientSequence(relation_weights(m, count)), horizon, label);
        } else {
          const int n = m.n;
          return OneDepSpec::stationary_a(
              CoefficientSequence::closed_form([n](long i) {
                if (i <= 1) return Rational(1);
                return Rational(Integer(2 * n)) / pow(Rational(n + 1), i);
              }),
              horizon, label);
        }
      },
      name);
}

// Horizon a model lives on when none is requested (type B is pinned).
inline int natural_horizon(const ProcessName& name, int requested) {
  if (const auto* b = std::get_if<TypeBDescents>(&name)) return b->n + 1;
  return requested;
}

// Two-block description X_i = h(U_i, U_{i+1}) of the generic-points
// process: U_i uniform on {*, 1..n} (symbol 0 is *), h(*, x) = 0,
// h(x, *) = 1, h(i, i+1 mod n) = 1, and 0 otherwise.
struct TwoBlockSampler {
  int alphabet = 0;
  std::vector<std::vector<std::uint8_t>> h;
};

inline TwoBlockSampler generic_points_sampler(int n) {
  if (n < 1) throw ParameterError("generic points need n >= 1");
  TwoBlockSampler s;
  s.alphabet = n + 1;
  s.h.assign(static_cast<std::size_t>(n + 1),
             std::vector<std::uint8_t>(static_cast<std::size_t>(n + 1), 0));
  for (int x = 1; x <= n; ++x) {
    s.h[static_cast<std::size_t>(x)][0] = 1;
    s.h[static_cast<std::size_t>(x)][static_cast<std::size_t>(x % n + 1)] = 1;
  }
  return s;
}

// Model names --------------------------------------------------------------

namespace detail {

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].str();
  }
  return out;
}

inline int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParameterError("expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw ParameterError("expected an integer, got '" + s + "'");
  return v;
}

inline Rational parse_rational(const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw ParameterError("expected a rational, got '" + s + "'");
  }
}

// key=value fields after the model prefix.
class Fields {
 public:
  Fields(const std::vector<std::string>& parts, std::size_t first) {
    for (std::size_t i = first; i < parts.size(); ++i) {
      const auto eq = parts[i].find('=');
      if (eq == std::string::npos)
        throw ParameterError("expected key=value, got '" + parts[i] + "'");
      values_.emplace_back(parts[i].substr(0, eq), parts[i].substr(eq + 1));
    }
  }
  std::string get(const std::string& key) const {
    for (const auto& [k, v] : values_)
      if (k == key) return v;
    throw ParameterError("missing parameter '" + key + "'");
  }
  void allow(std::initializer_list<const char*> keys) const {
    for (const auto& [k, v] : values_) {
      bool ok = false;
      for (const char* key : keys) ok = ok || k == key;
      if (!ok) throw ParameterError("unknown parameter '" + k + "'");
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> values_;
};

}  // namespace detail

// carries:b=10, descents:uniform, descents:mallows:q=1/2,
// descents:iid:p=1/4,1/4,1/2, descents:alternating, descents:typeB:n=5,
// poset:q=1:r=2, genericpoints:n=3, brenti:theta=1/2,1/2:R=11/01
// (rows of R separated by '/', each a string of 0s and 1s).
inline ProcessName parse_process(std::string_view text) {
  const auto parts = detail::split(text, ':');
  const std::string& head = parts[0];
  ProcessName out;
  if (head == "carries") {
    detail::Fields f(parts, 1);
    f.allow({"b"});
    out = CarriesBaseB{detail::parse_int(f.get("b"))};
  } else if (head == "descents") {
    if (parts.size() < 2) throw ParameterError("descents needs a model");
    const std::string& kind = parts[1];
    detail::Fields f(parts, 2);
    if (kind == "uniform") {
      f.allow({});
      out = UniformDescents{};
    } else if (kind == "mallows") {
      f.allow({"q"});
      out = MallowsDescents{detail::parse_rational(f.get("q"))};
    } else if (kind == "iid") {
      f.allow({"p"});
      IidTrials m;
      for (const auto& s : detail::split(f.get("p"), ','))
        m.p.push_back(detail::parse_rational(s));
      out = std::move(m);
    } else if (kind == "alternating") {
      f.allow({});
      out = AlternatingDescents{};
    } else if (kind == "typeB") {
      f.allow({"n"});
      out = TypeBDescents{detail::parse_int(f.get("n"))};
    } else {
      throw ParameterError("unknown descent model '" + kind + "'");
    }
  } else if (head == "poset") {
    detail::Fields f(parts, 1);
    f.allow({"q", "r"});
    out = BinomialPosetUnion{detail::parse_rational(f.get("q")),
                             detail::parse_int(f.get("r"))};
  } else if (head == "brenti") {
    detail::Fields f(parts, 1);
    f.allow({"theta", "R"});
    BrentiRelation m;
    for (const auto& s : detail::split(f.get("theta"), ','))
      m.theta.push_back(detail::parse_rational(s));
    for (const auto& row : detail::split(f.get("R"), '/')) {
      std::vector<bool> r;
      for (char c : row) {
        if (c != '0' && c != '1') throw ParameterError("relation rows are 0/1 strings");
        r.push_back(c == '1');
      }
      m.relation.push_back(std::move(r));
    }
    out = std::move(m);
  } else if (head == "genericpoints") {
    detail::Fields f(parts, 1);
    f.allow({"n"});
    out = GenericPoints{detail::parse_int(f.get("n"))};
  } else {
    throw ParameterError("unknown model '" + head + "'");
  }
  validate(out);
  return out;
}

inline std::string format(const ProcessName& name) {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, CarriesBaseB>) {
          return "carries:b=" + std::to_string(m.b);
        } else if constexpr (std::is_same_v<T, UniformDescents>) {
          return "descents:uniform";
        } else if constexpr (std::is_same_v<T, MallowsDescents>) {
          return "descents:mallows:q=" + m.q.str();
        } else if constexpr (std::is_same_v<T, IidTrials>) {
          return "descents:iid:p=" + detail::join(m.p);
        } else if constexpr (std::is_same_v<T, AlternatingDescents>) {
          return "descents:alternating";
        } else if constexpr (std::is_same_v<T, TypeBDescents>) {
          return "descents:typeB:n=" + std::to_string(m.n);
        } else if constexpr (std::is_same_v<T, BinomialPosetUnion>) {
          return "poset:q=" + m.q.str() + ":r=" + std::to_string(m.r);
        } else if constexpr (std::is_same_v<T, BrentiRelation>) {
          std::string rows;
          for (std::size_t i = 0; i < m.relation.size(); ++i) {
            if (i) rows += '/';
            for (bool b : m.relation[i]) rows += b ? '1' : '0';
          }
          return "brenti:theta=" + detail::join(m.theta) + ":R=" + rows;
        } else {
          return "genericpoints:n=" + std::to_string(m.n);
        }
      },
      name);
}

}  // namespace onedpp
