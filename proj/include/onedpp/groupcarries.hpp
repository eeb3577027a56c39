#pragma once

// Carries from central extensions of finite groups.
//
// G is a finite group given by its Cayley table, N a central subgroup and
// t(sigma) a choice of coset representatives for G/N with t(1) = 1. The
// factor set f(sigma, tau) in N is forced by t(sigma) t(tau) = t(sigma tau) f(sigma, tau).
// Multiplying uniform representatives t_1, t_2, ... down a column gives
// remainders r_{i+1} = r_i t_{i+1} (mod N) and carries f_i in N; the binary
// process B_i = [f_i != 1] is stationary, one-dependent and a two-block
// factor of the i.i.d. uniform remainders.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "onedpp/error.hpp"
#include "onedpp/exact/rational.hpp"
#include "onedpp/onedep/pattern.hpp"

namespace onedpp {

class FiniteGroup {
 public:
  // table[a][b] = index of a*b. Checks closure, identity, inverses and
  // associativity.
  explicit FiniteGroup(std::vector<std::vector<int>> table,
                       std::vector<std::string> names = {})
      : table_(std::move(table)), names_(std::move(names)) {
    const int n = order();
    if (n < 1) throw SetupError("group must be nonempty");
    for (const auto& row : table_) {
      if (static_cast<int>(row.size()) != n) throw SetupError("Cayley table must be square");
      for (int v : row)
        if (v < 0 || v >= n) throw SetupError("Cayley table entry out of range");
    }
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
      if (ok) identity_ = e;
    }
    if (identity_ < 0) throw SetupError("Cayley table has no identity");
    inverse_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        if (mul(a, b) == identity_ && mul(b, a) == identity_) inverse_[static_cast<std::size_t>(a)] = b;
      if (inverse_[static_cast<std::size_t>(a)] < 0)
        throw SetupError("element " + name(a) + " has no inverse");
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw SetupError("not associative at (" + name(a) + ", " + name(b) + ", " +
                             name(c) + ")");
    if (!names_.empty() && static_cast<int>(names_.size()) != n)
      throw SetupError("need one name per element");
  }

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const {
    return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  std::string name(int a) const {
    if (names_.empty()) return std::to_string(a);
    return names_[static_cast<std::size_t>(a)];
  }
  int find(const std::string& label) const {
    for (int a = 0; a < order(); ++a)
      if (name(a) == label) return a;
    throw SetupError("no element named " + label);
  }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<std::string> names_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

inline FiniteGroup cyclic_group(int m) {
  if (m < 1) throw SetupError("cyclic group needs m >= 1");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % m;
  return FiniteGroup(std::move(t));
}

// Element (g, h) has index g * |H| + h.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int m = g.order(), n = h.order();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m * n), std::vector<int>(static_cast<std::size_t>(m * n)));
  std::vector<std::string> names;
  for (int a = 0; a < m * n; ++a) {
    names.push_back("(" + g.name(a / n) + "," + h.name(a % n) + ")");
    for (int b = 0; b < m * n; ++b)
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          g.mul(a / n, b / n) * n + h.mul(a % n, b % n);
  }
  return FiniteGroup(std::move(t), std::move(names));
}

// Q_8 from the unit rules i j = k, j k = i, k i = j, x^2 = -1. Index
// 4 * sign + unit with units 1, i, j, k.
inline FiniteGroup quaternion_group() {
  // unit product (u, v) -> (sign flip, unit)
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int flip[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const char* units[4] = {"1", "i", "j", "k"};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  std::vector<std::string> names;
  for (int a = 0; a < 8; ++a) {
    names.push_back(std::string(a >= 4 ? "-" : "") + units[a % 4]);
    for (int b = 0; b < 8; ++b) {
      const int s = (a / 4 + b / 4 + flip[a % 4][b % 4]) % 2;
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 4 * s + unit[a % 4][b % 4];
    }
  }
  return FiniteGroup(std::move(t), std::move(names));
}

// Symmetries of the square, r^a s^b with index 2a + b and
// (a1, b1)(a2, b2) = (a1 + (-1)^{b1} a2, b1 + b2).
inline FiniteGroup dihedral_group_8() {
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  std::vector<std::string> names;
  for (int x = 0; x < 8; ++x) {
    const int a1 = x / 2, b1 = x % 2;
    names.push_back("r" + std::to_string(a1) + (b1 ? "s" : ""));
    for (int y = 0; y < 8; ++y) {
      const int a2 = y / 2, b2 = y % 2;
      const int a = ((a1 + (b1 ? -a2 : a2)) % 4 + 4) % 4;
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 2 * a + (b1 ^ b2);
    }
  }
  return FiniteGroup(std::move(t), std::move(names));
}

class CentralExtensionSetup {
 public:
  // reps[c] is t of coset c; the coset of the identity must come first
  // with t = identity.
  CentralExtensionSetup(FiniteGroup group, std::vector<int> subgroup,
                        std::vector<int> reps)
      : group_(std::move(group)), subgroup_(std::move(subgroup)), reps_(std::move(reps)) {
    const FiniteGroup& g = group_;
    const int n = g.order();
    std::vector<bool> in_n(static_cast<std::size_t>(n), false);
    for (int x : subgroup_) {
      if (x < 0 || x >= n) throw SetupError("subgroup index out of range");
      if (in_n[static_cast<std::size_t>(x)]) throw SetupError("repeated subgroup element");
      in_n[static_cast<std::size_t>(x)] = true;
    }
    if (!in_n[static_cast<std::size_t>(g.identity())])
      throw SetupError("subgroup must contain the identity");
    for (int a : subgroup_)
      for (int b : subgroup_)
        if (!in_n[static_cast<std::size_t>(g.mul(a, b))])
          throw SetupError("subgroup not closed: " + g.name(a) + " * " + g.name(b));
    for (int x : subgroup_)
      for (int a = 0; a < n; ++a)
        if (g.mul(a, x) != g.mul(x, a))
          throw SetupError("subgroup not central: " + g.name(a) + " and " + g.name(x) +
                           " do not commute");
    if (n % static_cast<int>(subgroup_.size()) != 0)
      throw SetupError("subgroup order does not divide group order");
    const int cosets = n / static_cast<int>(subgroup_.size());
    if (static_cast<int>(reps_.size()) != cosets)
      throw SetupError("need exactly one representative per coset");
    if (reps_.front() != g.identity())
      throw SetupError("the identity coset must be represented by the identity");

    coset_.assign(static_cast<std::size_t>(n), -1);
    for (int c = 0; c < cosets; ++c) {
      const int t = reps_[static_cast<std::size_t>(c)];
      if (t < 0 || t >= n) throw SetupError("representative index out of range");
      for (int x : subgroup_) {
        const int e = g.mul(x, t);
        if (coset_[static_cast<std::size_t>(e)] >= 0)
          throw SetupError("representatives " + g.name(reps_[static_cast<std::size_t>(coset_[static_cast<std::size_t>(e)])]) +
                           " and " + g.name(t) + " lie in the same coset");
        coset_[static_cast<std::size_t>(e)] = c;
      }
    }
    in_n_ = std::move(in_n);

    factor_.assign(static_cast<std::size_t>(cosets), std::vector<int>(static_cast<std::size_t>(cosets)));
    for (int s = 0; s < cosets; ++s)
      for (int u = 0; u < cosets; ++u) {
        const int prod = g.mul(rep(s), rep(u));
        const int f = g.mul(g.inv(rep(coset_of(prod))), prod);
        factor_[static_cast<std::size_t>(s)][static_cast<std::size_t>(u)] = f;
      }
  }

  const FiniteGroup& group() const { return group_; }
  const std::vector<int>& subgroup() const { return subgroup_; }
  const std::vector<int>& reps() const { return reps_; }
  int coset_count() const { return static_cast<int>(reps_.size()); }
  int rep(int coset) const { return reps_[static_cast<std::size_t>(coset)]; }
  int coset_of(int element) const { return coset_[static_cast<std::size_t>(element)]; }
  bool in_subgroup(int element) const { return in_n_[static_cast<std::size_t>(element)]; }

  // f(sigma, tau) with t(sigma) t(tau) = t(sigma tau) f(sigma, tau).
  int factor(int sigma, int tau) const {
    return factor_[static_cast<std::size_t>(sigma)][static_cast<std::size_t>(tau)];
  }
  const std::vector<std::vector<int>>& factor_set() const { return factor_; }

  // h(r, r') = f(r, t) where r^{-1} r' lies in the coset of t.
  int carry(int r, int r_next) const {
    const int t = coset_of(group_.mul(group_.inv(rep(r)), rep(r_next)));
    return factor(r, t);
  }

  bool factor_set_trivial() const {
    for (const auto& row : factor_)
      for (int f : row)
        if (f != group_.identity()) return false;
    return true;
  }

 private:
  FiniteGroup group_;
  std::vector<int> subgroup_;
  std::vector<int> reps_;
  std::vector<int> coset_;
  std::vector<bool> in_n_;
  std::vector<std::vector<int>> factor_;
};

// Standard setups.

inline CentralExtensionSetup quaternion_setup() {
  FiniteGroup q = quaternion_group();
  std::vector<int> center{q.find("1"), q.find("-1")};
  std::vector<int> reps{q.find("1"), q.find("i"), q.find("j"), q.find("k")};
  return CentralExtensionSetup(std::move(q), std::move(center), std::move(reps));
}

// Center {1, z^2} with z = xy, x = s, y = r s; representatives 1, x, y, z.
inline CentralExtensionSetup dihedral_setup() {
  FiniteGroup d = dihedral_group_8();
  std::vector<int> center{d.find("r0"), d.find("r2")};
  std::vector<int> reps{d.find("r0"), d.find("r0s"), d.find("r1s"), d.find("r3")};
  return CentralExtensionSetup(std::move(d), std::move(center), std::move(reps));
}

// C_{2m} with N = {0, m} and representatives 0..m-1.
inline CentralExtensionSetup cyclic_setup(int m) {
  std::vector<int> reps;
  for (int i = 0; i < m; ++i) reps.push_back(i);
  return CentralExtensionSetup(cyclic_group(2 * m), {0, m}, std::move(reps));
}

// C_{mk} with N = multiples of m and representatives 0..m-1 (ordinary
// base-m carries when k = m).
inline CentralExtensionSetup digit_setup(int m, int k) {
  std::vector<int> sub, reps;
  for (int i = 0; i < k; ++i) sub.push_back(i * m);
  for (int i = 0; i < m; ++i) reps.push_back(i);
  return CentralExtensionSetup(cyclic_group(m * k), std::move(sub), std::move(reps));
}

// C_2^3 with N = {000, 111}. `split` picks representatives 000, 100, 010, 110;
// otherwise 000, 100, 010, 001.
inline CentralExtensionSetup elementary_abelian_setup(bool split) {
  const FiniteGroup c2 = cyclic_group(2);
  FiniteGroup g = direct_product(direct_product(c2, c2), c2);
  const auto idx = [](int a, int b, int c) { return 4 * a + 2 * b + c; };
  std::vector<int> reps = split ? std::vector<int>{idx(0, 0, 0), idx(1, 0, 0), idx(0, 1, 0), idx(1, 1, 0)}
                                : std::vector<int>{idx(0, 0, 0), idx(1, 0, 0), idx(0, 1, 0), idx(0, 0, 1)};
  return CentralExtensionSetup(std::move(g), {idx(0, 0, 0), idx(1, 1, 1)}, std::move(reps));
}

struct CarriesDistribution {
  int horizon = 0;
  std::vector<Rational> probabilities;  // indexed by Pattern::mask()
  std::vector<Rational> a;              // a_0 .. a_horizon
};

// Exact law of B_1..B_{n-1} by a transfer-matrix pass over the uniform
// i.i.d. remainders r_1..r_n. `budget` caps 2^{n-1} * |G/N|^2.
inline CarriesDistribution carries_pattern_distribution(const CentralExtensionSetup& setup,
                                                        int n,
                                                        std::uint64_t budget = 10'000'000) {
  if (n < 1) throw ParameterError("horizon must be >= 1");
  const int m = setup.coset_count();
  const int id = setup.group().identity();
  if (n - 1 >= 40) throw BudgetError("horizon too large for exact carries distribution");
  const std::uint64_t cost = (std::uint64_t{1} << (n - 1)) * static_cast<std::uint64_t>(m) *
                             static_cast<std::uint64_t>(m);
  if (cost > budget)
    throw BudgetError("exact carries distribution needs " + std::to_string(cost) +
                      " steps, budget is " + std::to_string(budget));

  std::vector<std::vector<std::uint8_t>> bit(static_cast<std::size_t>(m), std::vector<std::uint8_t>(static_cast<std::size_t>(m)));
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s)
      bit[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = setup.carry(r, s) != id;

  // Integer path counts; every remainder sequence has weight m^{-n}.
  std::vector<Integer> mass(static_cast<std::size_t>(m), Integer(1));  // prefix mask 0, r_1
  for (int step = 1; step < n; ++step) {
    const std::size_t patterns = std::size_t{1} << (step - 1);
    std::vector<Integer> next(patterns * 2 * static_cast<std::size_t>(m), Integer(0));
    for (std::size_t p = 0; p < patterns; ++p)
      for (int r = 0; r < m; ++r) {
        const Integer& w = mass[p * static_cast<std::size_t>(m) + static_cast<std::size_t>(r)];
        if (w == 0) continue;
        for (int s = 0; s < m; ++s) {
          const std::size_t q = p | (std::size_t{bit[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)]} << (step - 1));
          next[q * static_cast<std::size_t>(m) + static_cast<std::size_t>(s)] += w;
        }
      }
    mass = std::move(next);
  }
  CarriesDistribution out;
  out.horizon = n;
  const std::size_t patterns = std::size_t{1} << (n - 1);
  Integer total(1);
  for (int i = 0; i < n; ++i) total *= m;
  out.probabilities.reserve(patterns);
  for (std::size_t p = 0; p < patterns; ++p) {
    Integer c(0);
    for (int r = 0; r < m; ++r) c += mass[p * static_cast<std::size_t>(m) + static_cast<std::size_t>(r)];
    out.probabilities.emplace_back(c, total);
  }

  // a_i = m^{-i} * #{r_1..r_i : all i-1 carries nontrivial}
  std::vector<Integer> run(static_cast<std::size_t>(m), Integer(1));
  out.a = {Rational(1), Rational(1)};
  Integer denom(m);
  for (int i = 2; i <= n; ++i) {
    std::vector<Integer> next(static_cast<std::size_t>(m), Integer(0));
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s)
        if (bit[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)]) next[static_cast<std::size_t>(s)] += run[static_cast<std::size_t>(r)];
    run = std::move(next);
    denom *= m;
    Integer c(0);
    for (const auto& x : run) c += x;
    out.a.emplace_back(c, denom);
  }
  out.a.resize(static_cast<std::size_t>(n + 1));
  return out;
}

struct ColumnProduct {
  std::vector<int> remainders;  // coset labels r_1..r_k
  std::vector<int> carries;     // f_1..f_{k-1}, elements of N
  std::vector<std::uint8_t> binary;  // B_i = [f_i != 1]
  int product = 0;              // t_1 ... t_k as a group element
};

// Multiplies representatives t(c_1) ... t(c_k) down a column.
inline ColumnProduct multiply_column(const CentralExtensionSetup& setup,
                                     const std::vector<int>& cosets) {
  const FiniteGroup& g = setup.group();
  ColumnProduct out;
  out.product = g.identity();
  if (cosets.empty()) return out;
  int carry_total = g.identity();
  int r = cosets.front();
  out.remainders.push_back(r);
  for (std::size_t i = 1; i < cosets.size(); ++i) {
    const int t = cosets[i];
    const int f = setup.factor(r, t);
    const int r_next = setup.coset_of(g.mul(setup.rep(r), setup.rep(t)));
    out.carries.push_back(f);
    out.binary.push_back(f != g.identity());
    carry_total = g.mul(carry_total, f);
    r = r_next;
    out.remainders.push_back(r);
  }
  out.product = g.mul(carry_total, setup.rep(r));
  return out;
}

struct CarriesSample {
  std::vector<int> labels;  // t_i as coset labels
  ColumnProduct column;
};

// Uniform i.i.d. representatives t_1..t_length from a seeded stream.
inline CarriesSample simulate_carries(const CentralExtensionSetup& setup, int length,
                                      std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, setup.coset_count() - 1);
  CarriesSample s;
  s.labels.reserve(static_cast<std::size_t>(std::max(length, 0)));
  for (int i = 0; i < length; ++i) s.labels.push_back(pick(rng));
  s.column = multiply_column(setup, s.labels);
  return s;
}

inline CarriesSample simulate_carries(const CentralExtensionSetup& setup, int length,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return simulate_carries(setup, length, rng);
}

}  // namespace onedpp
