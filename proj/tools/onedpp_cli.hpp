#pragma once

// Command-line front end. Every run echoes its resolved configuration and
// the library version before the result. Exit codes: 0 success, 1 oracle
// mismatch, 2 usage error.

#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "onedpp.hpp"

namespace onedpp::cli {

inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;

struct Options {
  std::string model;
  std::string spec_file;
  int n = 0;
  std::string format = "csv";
  std::string output;

  // prob / corr
  std::string ones, zeros, pattern, set;
  bool all = false;
  // kernel
  std::string range;
  bool dense = false;
  // validate
  int max_n = 8;
  // simulate
  std::optional<std::uint64_t> seed;
  std::uint64_t reps = 100000;
  bool uniform_sum = false;
  // group
  std::string builtin, group_file;
  int length = 0;
  bool simulate = false;
  // connectivity
  bool kernel = false;
};

class Report {
 public:
  Report(std::string command, const Options& o) : command_(std::move(command)), format_(o.format) {
    config_.emplace_back("command", command_);
  }
  void config(const std::string& key, const std::string& value) { config_.emplace_back(key, value); }

  // CSV rows follow the header; JSON collects the same content.
  void table(std::vector<std::string> header, std::vector<std::vector<std::string>> rows,
             const std::string& key = "table") {
    tables_.push_back({key, std::move(header), std::move(rows)});
  }
  void value(const std::string& key, const std::string& v) { values_.emplace_back(key, Json(v)); }
  void value_json(const std::string& key, Json v) { values_.emplace_back(key, std::move(v)); }
  void note(const std::string& line) { notes_.push_back(line); }

  void write(std::ostream& out) const {
    if (format_ == "json") {
      Json j;
      j["version"] = kVersion;
      Json cfg = Json::object();
      for (const auto& [k, v] : config_) cfg[k] = v;
      j["config"] = cfg;
      for (const auto& [k, v] : values_) j[k] = v;
      for (const auto& t : tables_) {
        Json rows = Json::array();
        for (const auto& r : t.rows) {
          Json row = Json::object();
          for (std::size_t i = 0; i < t.header.size() && i < r.size(); ++i) row[t.header[i]] = r[i];
          rows.push_back(row);
        }
        j[t.key] = rows;
      }
      if (!notes_.empty()) j["notes"] = notes_;
      out << j.dump(2) << '\n';
      return;
    }
    out << "# onedpp " << kVersion << '\n';
    for (const auto& [k, v] : config_) out << "# " << k << '=' << v << '\n';
    for (const auto& line : notes_) out << "# " << line << '\n';
    // Scalars form one table: a header row of names, then a row of values.
    std::vector<std::string> keys, cells;
    for (const auto& [k, v] : values_) {
      if (v.is_object() || v.is_array()) continue;
      keys.push_back(k);
      cells.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    bool first = true;
    if (!keys.empty()) {
      for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
      out << '\n';
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
      out << '\n';
      first = false;
    }
    for (const auto& t : tables_) {
      if (!first) out << '\n';
      first = false;
      for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << t.header[i];
      out << '\n';
      for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
        out << '\n';
      }
    }
  }

 private:
  struct Table {
    std::string key;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
  };
  std::string command_;
  std::string format_;
  std::vector<std::pair<std::string, std::string>> config_;
  std::vector<std::pair<std::string, Json>> values_;
  std::vector<Table> tables_;
  std::vector<std::string> notes_;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

inline std::string fmt_double(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

inline PositionSet parse_positions(const std::string& text) {
  PositionSet out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad position '" + item + "'");
    }
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw UsageError("repeated position in '" + text + "'");
  return out;
}

struct Resolved {
  std::optional<ProcessName> name;
  OneDepSpec spec;
};

inline Resolved resolve_spec(const Options& o, Report& rep, int fallback_horizon = 0) {
  if (o.model.empty() == o.spec_file.empty())
    throw UsageError("give exactly one of --model or --spec");
  if (!o.spec_file.empty()) {
    std::ifstream in(o.spec_file);
    if (!in) throw UsageError("cannot open spec file " + o.spec_file);
    OneDepSpec s = read_spec(in);
    if (o.n > 0 && o.n != s.horizon()) {
      if (!s.is_stationary()) throw UsageError("--n does not match the spec's horizon");
      s = s.with_horizon(o.n);
    }
    rep.config("spec", o.spec_file);
    rep.config("n", std::to_string(s.horizon()));
    return {std::nullopt, s};
  }
  const ProcessName name = parse_process(o.model);
  const int horizon = natural_horizon(name, o.n > 0 ? o.n : fallback_horizon);
  if (horizon < 1) throw UsageError("--n is required for model " + o.model);
  rep.config("model", format(name));
  rep.config("n", std::to_string(horizon));
  return {name, build(name, horizon)};
}

inline Pattern resolve_pattern(const Options& o, int horizon, Report& rep) {
  const int given = !o.ones.empty() + !o.zeros.empty() + !o.pattern.empty();
  if (given != 1) throw UsageError("give exactly one of --ones, --zeros or --pattern");
  if (!o.pattern.empty()) {
    rep.config("pattern", o.pattern);
    if (static_cast<int>(o.pattern.size()) != horizon - 1)
      throw UsageError("--pattern needs " + std::to_string(horizon - 1) + " bits");
    return Pattern::from_bits(o.pattern);
  }
  if (!o.ones.empty()) {
    rep.config("ones", o.ones);
    return Pattern::from_ones(horizon, parse_positions(o.ones));
  }
  rep.config("zeros", o.zeros);
  const PositionSet zeros = parse_positions(o.zeros);
  PositionSet ones;
  for (int x = 1; x < horizon; ++x)
    if (!std::binary_search(zeros.begin(), zeros.end(), x)) ones.push_back(x);
  for (int z : zeros)
    if (z < 1 || z >= horizon) throw UsageError("zero position out of range");
  return Pattern::from_ones(horizon, ones);
}

inline int cmd_prob(const Options& o, std::ostream& out) {
  Report rep("prob", o);
  const auto r = resolve_spec(o, rep);
  const int h = r.spec.horizon();
  if (o.all) {
    rep.config("all", "true");
    const auto dist = pattern_distribution(r.spec);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t m = 0; m < dist.size(); ++m)
      rows.push_back({Pattern::from_mask(h, m).str(), dist[m].str()});
    rep.table({"pattern", "probability"}, std::move(rows), "distribution");
  } else {
    const Pattern p = resolve_pattern(o, h, rep);
    rep.value("probability", pattern_probability(r.spec, p).str());
  }
  rep.write(out);
  return kOk;
}

inline int cmd_corr(const Options& o, std::ostream& out) {
  Report rep("corr", o);
  const auto r = resolve_spec(o, rep);
  rep.config("set", o.set);
  const PositionSet a = parse_positions(o.set);
  rep.value("correlation", correlation(r.spec, a).str());
  rep.value("kernel_minor", dense_kernel(r.spec).minor(a).str());
  rep.write(out);
  return kOk;
}

inline std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--range must look like -1..16");
  try {
    return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--range must look like -1..16");
  }
}

inline std::pair<long, long> parse_range(const std::string& text);

inline int cmd_kernel(const Options& o, std::ostream& out) {
  Report rep("kernel", o);
  const auto r = resolve_spec(o, rep, o.range.empty() ? 0 : static_cast<int>(std::max(parse_range(o.range).second + 2, 2L)));
  if (r.spec.is_stationary() && !o.dense) {
    const auto [lo, hi] = o.range.empty() ? std::pair<long, long>{-1, std::max(r.spec.horizon() - 2, 0)}
                                          : parse_range(o.range);
    rep.config("range", std::to_string(lo) + ".." + std::to_string(hi));
    const StationaryKernel k = kernel_stationary(r.spec, hi);
    std::vector<std::vector<std::string>> rows;
    for (long m = lo; m <= hi; ++m) rows.push_back({std::to_string(m), k(m).str()});
    rep.table({"m", "k"}, std::move(rows), "kernel");
  } else {
    if (!o.range.empty()) throw UsageError("--range applies to stationary kernels only");
    rep.config("dense", "true");
    const DenseKernel k = dense_kernel(r.spec);
    std::vector<std::vector<std::string>> rows;
    for (long x = k.first_position(); x <= k.last_position(); ++x)
      for (long y = k.first_position(); y <= k.last_position(); ++y)
        rows.push_back({std::to_string(x), std::to_string(y), k(x, y).str()});
    rep.table({"row", "col", "value"}, std::move(rows), "kernel");
    if (const auto* t = std::get_if<TableE>(&r.spec.form())) {
      (void)t;
      rep.value("normalizer", kernel_from_E(r.spec).normalizer.str());
    }
  }
  rep.write(out);
  return kOk;
}

inline int cmd_counts(const Options& o, std::ostream& out) {
  Report rep("counts", o);
  const auto r = resolve_spec(o, rep);
  const CountPolynomial law = count_polynomial(dense_kernel(r.spec));
  std::vector<std::vector<std::string>> rows;
  for (std::size_t j = 0; j < law.coefficients.size(); ++j)
    rows.push_back({std::to_string(j), law.coefficients[j].str()});
  rep.table({"count", "probability"}, std::move(rows), "counts");
  rep.write(out);
  return kOk;
}

inline int cmd_stats(const Options& o, std::ostream& out) {
  Report rep("stats", o);
  const auto r = resolve_spec(o, rep);
  const DenseKernel k = dense_kernel(r.spec);
  const Moments m = count_moments(k);
  rep.value("mean", m.mean.str());
  rep.value("variance", m.variance.str());
  if (m.variance.sign() > 0) {
    const NormalApproxReport na = normal_approx_check(k);
    rep.value("approx_sigma", fmt_double(na.sigma));
    rep.value("approx_sup_distance", fmt_double(na.sup_distance));
    rep.value("approx_bound", fmt_double(na.bound));
    rep.value("within_bound", na.within_bound ? "true" : "false");
    rep.value("mode", std::to_string(na.mode));
    rep.value("approx_mode_offset", fmt_double(na.mode_offset));
    rep.value("unimodal", na.unimodal ? "true" : "false");
  }
  const EigenReport ev = numeric_eigenvalues(k);
  std::vector<std::vector<std::string>> rows;
  for (const auto& v : ev.values) rows.push_back({fmt_double(v.real()), fmt_double(v.imag())});
  rep.value("distinct_eigenvalues", std::to_string(ev.distinct));
  rep.value("distinct_real_eigenvalues", std::to_string(ev.distinct_real));
  rep.value("approx_eigen_residual", fmt_double(ev.residual));
  rep.table({"approx_real", "approx_imag"}, std::move(rows), "eigenvalues");
  rep.note("eigenvalue counts are exact; eigenvalue values are double-precision approximations");
  rep.write(out);
  return kOk;
}

inline int cmd_simulate(const Options& o, std::ostream& out) {
  Report rep("simulate", o);
  if (!o.seed) throw UsageError("simulate requires --seed");
  if (o.uniform_sum) {
    if (o.n < 1) throw UsageError("--n is required");
    rep.config("uniform_sum", "true");
    rep.config("n", std::to_string(o.n));
    rep.config("reps", std::to_string(o.reps));
    rep.config("seed", std::to_string(*o.seed));
    const UniformSumReport u = uniform_sum_check(o.n, o.reps, *o.seed);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t j = 0; j < u.floor_counts.size(); ++j)
      rows.push_back({std::to_string(j), std::to_string(u.floor_counts[j]), u.exact[j].str(),
                      fmt_double(u.gates[j].z), u.gates[j].passed ? "pass" : "fail"});
    rep.value("pathwise_mismatches", std::to_string(u.pathwise_mismatches));
    rep.table({"floor", "count", "exact", "approx_z", "gate"}, std::move(rows), "floor_law");
    rep.write(out);
    return kOk;
  }
  if (o.model.empty()) throw UsageError("simulate needs --model");
  const auto r = resolve_spec(o, rep);
  rep.config("reps", std::to_string(o.reps));
  rep.config("seed", std::to_string(*o.seed));
  const SimulationResult sim = simulate_process(*r.name, r.spec.horizon(), o.reps, *o.seed);
  const CountPolynomial law = count_polynomial(dense_kernel(r.spec));
  std::vector<std::vector<std::string>> rows;
  for (std::size_t j = 0; j < sim.count_histogram.size(); ++j) {
    const double p = law.coefficients[j].to_double();
    const double est = static_cast<double>(sim.count_histogram[j]) / static_cast<double>(sim.reps);
    const Gate g = make_gate("count", est, p, std::sqrt(p * (1 - p) / static_cast<double>(sim.reps)));
    rows.push_back({std::to_string(j), std::to_string(sim.count_histogram[j]), law.coefficients[j].str(),
                    fmt_double(g.z), g.passed ? "pass" : "fail"});
  }
  rep.table({"count", "observed", "exact", "approx_z", "gate"}, std::move(rows), "count_law");
  std::vector<std::vector<std::string>> sites;
  for (int x = 1; x < r.spec.horizon(); ++x) {
    const Rational exact = correlation(r.spec, {x});
    const Gate g = make_gate("site", sim.site_rate(x), exact.to_double(), sim.site_rate_se(x));
    sites.push_back({std::to_string(x), fmt_double(sim.site_rate(x)), exact.str(), fmt_double(g.z),
                     g.passed ? "pass" : "fail"});
  }
  rep.table({"position", "approx_rate", "exact", "approx_z", "gate"}, std::move(sites), "sites");
  rep.write(out);
  return kOk;
}

inline int cmd_validate(const Options& o, std::ostream& out) {
  Report rep("validate", o);
  const auto r = resolve_spec(o, rep);
  rep.config("max_n", std::to_string(o.max_n));
  const ValidationReport v = validate_spec(r.spec, o.max_n);
  rep.value("valid", v.ok ? "true" : "false");
  rep.value("checked", std::to_string(v.checked));
  if (!v.note.empty()) rep.value("note", v.note);
  std::vector<std::vector<std::string>> rows;
  for (const auto& f : v.failures)
    rows.push_back({std::to_string(f.horizon), f.pattern.str(), f.value.str()});
  rep.table({"horizon", "pattern", "value"}, std::move(rows), "failures");
  if (o.format == "json") rep.value_json("spec", to_json(r.spec));
  rep.write(out);
  return kOk;
}

inline CentralExtensionSetup builtin_setup(const std::string& name) {
  if (name == "q8") return quaternion_setup();
  if (name == "d8") return dihedral_setup();
  if (name == "c2cubed:split") return elementary_abelian_setup(true);
  if (name == "c2cubed:twisted") return elementary_abelian_setup(false);
  const auto param = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      return std::stoi(name.substr(prefix.size()));
    } catch (const std::exception&) {
      throw UsageError("bad group parameter in '" + name + "'");
    }
  };
  if (auto m = param("cyclic:m=")) return cyclic_setup(*m);
  if (auto m = param("digits:m=")) return digit_setup(*m, *m);
  throw UsageError("unknown group '" + name +
                   "' (q8, d8, cyclic:m=M, digits:m=M, c2cubed:split, c2cubed:twisted)");
}

inline CentralExtensionSetup resolve_setup(const Options& o, Report& rep) {
  if (o.builtin.empty() == o.group_file.empty())
    throw UsageError("give exactly one of --builtin or --group");
  if (!o.builtin.empty()) {
    rep.config("builtin", o.builtin);
    return builtin_setup(o.builtin);
  }
  std::ifstream in(o.group_file);
  if (!in) throw UsageError("cannot open group file " + o.group_file);
  rep.config("group", o.group_file);
  return read_setup(in);
}

inline int cmd_group(const Options& o, std::ostream& out) {
  Report rep("group", o);
  const CentralExtensionSetup s = resolve_setup(o, rep);
  const FiniteGroup& g = s.group();
  std::vector<std::vector<std::string>> rows;
  for (int a = 0; a < s.coset_count(); ++a)
    for (int b = 0; b < s.coset_count(); ++b)
      rows.push_back({g.name(s.rep(a)), g.name(s.rep(b)), g.name(s.factor(a, b))});
  rep.table({"t_sigma", "t_tau", "f"}, std::move(rows), "factor_set");
  rep.value("trivial_factor_set", s.factor_set_trivial() ? "true" : "false");
  if (o.n > 0) {
    rep.config("n", std::to_string(o.n));
    const auto d = carries_pattern_distribution(s, o.n);
    std::vector<std::vector<std::string>> dist;
    for (std::size_t m = 0; m < d.probabilities.size(); ++m)
      dist.push_back({Pattern::from_mask(o.n, m).str(), d.probabilities[m].str()});
    rep.table({"pattern", "probability"}, std::move(dist), "distribution");
    std::vector<std::vector<std::string>> a;
    for (std::size_t i = 0; i < d.a.size(); ++i) a.push_back({std::to_string(i), d.a[i].str()});
    rep.table({"i", "a"}, std::move(a), "run_probabilities");
  }
  if (o.simulate) {
    if (!o.seed) throw UsageError("--simulate requires --seed");
    rep.config("length", std::to_string(o.length));
    rep.config("seed", std::to_string(*o.seed));
    const CarriesSample smp = simulate_carries(s, o.length, *o.seed);
    std::vector<std::vector<std::string>> col;
    for (std::size_t i = 0; i < smp.labels.size(); ++i) {
      const std::string carry = i + 1 < smp.labels.size() ? g.name(smp.column.carries[i]) : "";
      col.push_back({std::to_string(i + 1), g.name(s.rep(smp.labels[i])),
                     g.name(s.rep(smp.column.remainders[i])), carry});
    }
    rep.table({"i", "t", "remainder", "carry"}, std::move(col), "column");
    rep.value("product", g.name(smp.column.product));
  }
  rep.write(out);
  return kOk;
}

inline int cmd_connectivity(const Options& o, std::ostream& out) {
  Report rep("connectivity", o);
  if (o.n < 1) throw UsageError("--n is required");
  rep.config("n", std::to_string(o.n));
  if (o.kernel) {
    rep.config("kernel", "true");
    const DenseKernel k = connectivity_kernel(o.n);
    std::vector<std::vector<std::string>> rows;
    for (long x = k.first_position(); x <= k.last_position(); ++x)
      for (long y = k.first_position(); y <= k.last_position(); ++y)
        rows.push_back({std::to_string(x), std::to_string(y), k(x, y).str()});
    rep.table({"row", "col", "value"}, std::move(rows), "kernel");
  }
  if (o.simulate) {
    if (!o.seed) throw UsageError("--simulate requires --seed");
    rep.config("reps", std::to_string(o.reps));
    rep.config("seed", std::to_string(*o.seed));
    std::mt19937_64 rng(*o.seed);
    const auto f = indecomposable_counts(o.n);
    std::vector<std::uint64_t> hits(static_cast<std::size_t>(o.n + 1), 0);
    std::vector<std::uint64_t> sizes(static_cast<std::size_t>(o.n), 0);
    for (std::uint64_t r = 0; r < o.reps; ++r) {
      const auto path = simulate_connectivity(o.n, rng, f);
      for (int x : path) ++hits[static_cast<std::size_t>(x)];
      ++sizes[path.size() - 2];
    }
    std::vector<std::vector<std::string>> rows;
    for (int x = 0; x <= o.n; ++x) {
      const Rational exact = x == 0 || x == o.n ? Rational(1) : connectivity_correlation(o.n, {x});
      rows.push_back({std::to_string(x), std::to_string(hits[static_cast<std::size_t>(x)]), exact.str()});
    }
    rep.table({"position", "hits", "exact_probability"}, std::move(rows), "positions");
    std::vector<std::vector<std::string>> hist;
    for (std::size_t s = 0; s < sizes.size(); ++s) hist.push_back({std::to_string(s), std::to_string(sizes[s])});
    rep.table({"interior_points", "count"}, std::move(hist), "sizes");
  }
  if (!o.kernel && !o.simulate) {
    const auto f = indecomposable_counts(o.n);
    Rational mean(0);
    for (int i = 1; i < o.n; ++i) mean += Rational(Integer(1), binomial(o.n, i));
    rep.value("expected_size", mean.str());
    std::vector<std::vector<std::string>> fr;
    for (int m = 1; m <= o.n; ++m) fr.push_back({std::to_string(m), f[static_cast<std::size_t>(m)].get_str()});
    rep.table({"m", "indecomposable"}, std::move(fr), "indecomposable_counts");
  }
  rep.write(out);
  return kOk;
}

// Exact comparison of the determinant machinery with enumeration.
inline int cmd_oracle_check(const Options& o, std::ostream& out) {
  Report rep("oracle-check", o);
  std::optional<OracleModel> model;
  std::optional<ProcessName> name;
  std::optional<CentralExtensionSetup> setup;
  if (!o.model.empty()) {
    if (o.model == "connectivity") {
      rep.config("model", "connectivity");
      model = ConnectivityPermutations{};
    } else {
      name = parse_process(o.model);
      rep.config("model", format(*name));
      model = OracleModel{*name};
    }
  } else {
    setup = resolve_setup(o, rep);
    model = OracleModel{*setup};
  }
  // An explicit spec is checked against the model's enumerated law.
  std::optional<OneDepSpec> candidate;
  if (!o.spec_file.empty()) {
    if (!name) throw UsageError("--spec needs a catalog --model to compare against");
    std::ifstream in(o.spec_file);
    if (!in) throw UsageError("cannot open spec file " + o.spec_file);
    candidate = read_spec(in);
    rep.config("spec", o.spec_file);
  }
  int top = name ? natural_horizon(*name, o.n) : o.n;
  if (candidate && (!candidate->is_stationary() || o.n == 0)) top = candidate->horizon();
  if (top < 2) throw UsageError("--n must be >= 2");
  rep.config("n", std::to_string(top));
  const bool pinned = (name && std::holds_alternative<TypeBDescents>(*name)) ||
                      (candidate && !candidate->is_stationary());
  std::vector<std::vector<std::string>> mismatches;
  std::uint64_t checked = 0;
  for (int h = pinned ? top : 2; h <= top; ++h) {
    const auto truth = oracle_distribution(*model, h);
    const auto rho = oracle_correlations(truth);
    std::vector<Rational> dist;
    DenseKernel k;
    if (name) {
      const OneDepSpec s = !candidate                     ? build(*name, h)
                           : candidate->is_stationary() ? candidate->with_horizon(h)
                                                        : *candidate;
      dist = pattern_distribution(s);
      k = dense_kernel(s);
    } else if (setup) {
      const auto d = carries_pattern_distribution(*setup, h);
      dist = d.probabilities;
      k = dense_kernel(OneDepSpec::stationary_a(CoefficientSequence(d.a), h));
    }
    // Connectivity: 0 and h always belong to the set, so correlations of
    // A inside 1..h-1 are minors over {0} + A + {h}.
    const DenseKernel full = name || setup ? DenseKernel() : connectivity_kernel(h);
    const auto minor_of = [&](std::size_t m) {
      PositionSet a;
      for (int i = 0; i < h - 1; ++i)
        if (m >> i & 1U) a.push_back(i + 1);
      if (name || setup) return k.minor(a);
      a.insert(a.begin(), 0);
      a.push_back(h);
      return full.minor(a);
    };
    if (!name && !setup) {
      std::vector<Rational> rho(truth.size());
      for (std::size_t m = 0; m < truth.size(); ++m) rho[m] = minor_of(m);
      // superset Moebius inversion
      dist = rho;
      for (std::size_t bit = 1; bit < dist.size(); bit <<= 1)
        for (std::size_t m = 0; m < dist.size(); ++m)
          if (!(m & bit)) dist[m] -= dist[m | bit];
    }
    for (std::size_t m = 0; m < truth.size(); ++m) {
      ++checked;
      if (dist[m] != truth[m])
        mismatches.push_back({std::to_string(h), "pattern", Pattern::from_mask(h, m).str(),
                              dist[m].str(), truth[m].str()});
      const Rational minor = minor_of(m);
      ++checked;
      if (minor != rho[m])
        mismatches.push_back({std::to_string(h), "minor", Pattern::from_mask(h, m).str(), minor.str(),
                              rho[m].str()});
    }
  }
  rep.value("checked", std::to_string(checked));
  const bool clean = mismatches.empty();
  rep.value("mismatches", std::to_string(mismatches.size()));
  rep.table({"horizon", "kind", "item", "computed", "oracle"}, std::move(mismatches), "diff");
  rep.write(out);
  return clean ? kOk : kMismatch;
}

// Full enumerated distribution.
inline int cmd_oracle(const Options& o, std::ostream& out) {
  Report rep("oracle", o);
  OracleModel model = ConnectivityPermutations{};
  int h = o.n;
  if (!o.model.empty() && o.model != "connectivity") {
    const ProcessName name = parse_process(o.model);
    h = natural_horizon(name, o.n);
    rep.config("model", format(name));
    model = name;
  } else if (!o.model.empty()) {
    rep.config("model", "connectivity");
  } else {
    model = resolve_setup(o, rep);
  }
  if (h < 1) throw UsageError("--n is required");
  rep.config("n", std::to_string(h));
  const auto dist = oracle_distribution(model, h);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t m = 0; m < dist.size(); ++m) rows.push_back({Pattern::from_mask(h, m).str(), dist[m].str()});
  rep.table({"pattern", "probability"}, std::move(rows), "distribution");
  rep.write(out);
  return kOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact one-dependent determinantal point processes", "onedpp"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;

  const auto spec_opts = [&](CLI::App* c) {
    c->add_option("--model", o.model, "catalog model, e.g. carries:b=10");
    c->add_option("--spec", o.spec_file, "JSON spec file");
    c->add_option("--n", o.n, "horizon");
  };
  const auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    c->add_option("--output", o.output, "write to file instead of stdout");
  };
  const auto group_opts = [&](CLI::App* c) {
    c->add_option("--builtin", o.builtin, "q8, d8, cyclic:m=M, digits:m=M, c2cubed:split, c2cubed:twisted");
    c->add_option("--group", o.group_file, "JSON group file");
  };

  auto* prob = app.add_subcommand("prob", "probability of a binary pattern");
  spec_opts(prob);
  common(prob);
  prob->add_option("--ones", o.ones, "comma-separated positions of ones");
  prob->add_option("--zeros", o.zeros, "comma-separated positions of zeros");
  prob->add_option("--pattern", o.pattern, "bit string x_1..x_{n-1}");
  prob->add_flag("--all", o.all, "whole pattern distribution");

  auto* corr = app.add_subcommand("corr", "correlation P(A inside X)");
  spec_opts(corr);
  common(corr);
  corr->add_option("--set", o.set, "comma-separated positions")->required();

  auto* kern = app.add_subcommand("kernel", "correlation kernel");
  spec_opts(kern);
  common(kern);
  kern->add_option("--range", o.range, "offsets a..b of a stationary kernel");
  kern->add_flag("--dense", o.dense, "dense row,col,value listing");

  auto* counts = app.add_subcommand("counts", "law of the number of ones");
  spec_opts(counts);
  common(counts);

  auto* stats = app.add_subcommand("stats", "moments, normal approximation, eigenvalues");
  spec_opts(stats);
  common(stats);

  auto* sim = app.add_subcommand("simulate", "Monte Carlo against exact values");
  spec_opts(sim);
  common(sim);
  sim->add_option("--reps", o.reps, "replicates")->required();
  sim->add_option("--seed", o.seed, "RNG seed")->required();
  sim->add_flag("--uniform-sum", o.uniform_sum, "floors of uniform partial sums");

  auto* oc = app.add_subcommand("oracle-check", "compare with brute-force enumeration");
  oc->add_option("--model", o.model, "catalog model or 'connectivity'");
  oc->add_option("--n", o.n, "largest horizon");
  oc->add_option("--spec", o.spec_file, "JSON spec to check against --model");
  group_opts(oc);
  common(oc);

  auto* orc = app.add_subcommand("oracle", "brute-force pattern distribution");
  orc->add_option("--model", o.model, "catalog model or 'connectivity'");
  orc->add_option("--n", o.n, "horizon");
  group_opts(orc);
  common(orc);

  auto* grp = app.add_subcommand("group", "carries of a central extension");
  group_opts(grp);
  common(grp);
  grp->add_option("--n", o.n, "exact pattern law at this horizon");
  grp->add_flag("--simulate", o.simulate, "multiply one random column");
  grp->add_option("--length", o.length, "column length");
  grp->add_option("--seed", o.seed, "RNG seed");

  auto* con = app.add_subcommand("connectivity", "connectivity sets of uniform permutations");
  common(con);
  con->add_option("--n", o.n, "permutation size")->required();
  con->add_flag("--kernel", o.kernel, "kernel on 0..n");
  con->add_flag("--simulate", o.simulate, "simulate the chain");
  con->add_option("--reps", o.reps, "replicates");
  con->add_option("--seed", o.seed, "RNG seed");

  auto* val = app.add_subcommand("validate", "check every pattern probability is nonnegative");
  spec_opts(val);
  common(val);
  val->add_option("--max-n", o.max_n, "largest horizon for stationary specs");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const std::map<CLI::App*, int (*)(const Options&, std::ostream&)> dispatch{
      {prob, cmd_prob},   {corr, cmd_corr},         {kern, cmd_kernel},       {counts, cmd_counts},
      {stats, cmd_stats}, {sim, cmd_simulate},      {oc, cmd_oracle_check},   {grp, cmd_group},
      {con, cmd_connectivity}, {val, cmd_validate}, {orc, cmd_oracle}};
  try {
    std::ostringstream buffer;
    int code = kOk;
    for (const auto& [sub, fn] : dispatch)
      if (sub->parsed()) code = fn(o, buffer);
    if (o.output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(o.output);
      if (!file) throw UsageError("cannot write " + o.output);
      file << buffer.str();
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace onedpp::cli
