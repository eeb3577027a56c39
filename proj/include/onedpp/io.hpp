#pragma once

// Spec and group files (JSON) and kernel dumps (CSV). Rationals are always
// strings "num/den" (integers without "/1").

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include <json.hpp>

#include "onedpp/error.hpp"
#include "onedpp/exact/matrix.hpp"
#include "onedpp/groupcarries.hpp"
#include "onedpp/onedep/kernel.hpp"
#include "onedpp/onedep/spec.hpp"

namespace onedpp {

using Json = nlohmann::ordered_json;

inline Json to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

inline std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw ParameterError("expected an array of rational strings");
  std::vector<Rational> out;
  for (const auto& x : j) {
    if (x.is_string()) {
      out.push_back(Rational::parse(x.get<std::string>()));
    } else if (x.is_number_integer()) {
      out.emplace_back(x.get<long>());
    } else {
      throw ParameterError("rationals must be strings like \"3/4\"");
    }
  }
  return out;
}

// Closed-form sequences are written out to their horizon.
inline Json to_json(const OneDepSpec& spec) {
  Json j;
  j["variant"] = spec.variant_name();
  j["horizon"] = spec.horizon();
  if (!spec.label().empty()) j["label"] = spec.label();
  const long count = spec.horizon() + 1;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, StationaryA>) {
          j["a"] = to_json(f.a.prefix(std::min(count, f.a.known_length())));
        } else if constexpr (std::is_same_v<T, StationaryE>) {
          j["e"] = to_json(f.e.prefix(std::min(count, f.e.known_length())));
        } else if constexpr (std::is_same_v<T, TableE>) {
          Json rows = Json::array();
          for (std::size_t r = 0; r < f.e.rows(); ++r) {
            std::vector<Rational> row(f.e.row(r).begin(), f.e.row(r).end());
            rows.push_back(to_json(row));
          }
          j["e"] = rows;
        } else {
          Json rho = Json::array();
          for (const auto& [key, value] : f.rho)
            rho.push_back(Json{{"x", key.first}, {"y", key.second}, {"value", value.str()}});
          j["rho"] = rho;
        }
      },
      spec.form());
  return j;
}

inline OneDepSpec spec_from_json(const Json& j) {
  try {
    const std::string variant = j.at("variant").get<std::string>();
    const std::string label = j.value("label", std::string{});
    if (variant == "TableE") {
      const auto& rows = j.at("e");
      const std::size_t n = rows.size();
      RationalMatrix e(n, n);
      for (std::size_t r = 0; r < n; ++r) {
        const auto row = rationals_from_json(rows[r]);
        if (row.size() != n) throw ParameterError("e-table must be square");
        for (std::size_t c = 0; c < n; ++c) e(r, c) = row[c];
      }
      OneDepSpec s = OneDepSpec::table_e(std::move(e), label);
      if (j.contains("horizon") && j.at("horizon").get<int>() != s.horizon())
        throw ParameterError("horizon does not match the e-table size");
      return s;
    }
    const int horizon = j.at("horizon").get<int>();
    if (variant == "StationaryA")
      return OneDepSpec::stationary_a(CoefficientSequence(rationals_from_json(j.at("a"))), horizon, label);
    if (variant == "StationaryE")
      return OneDepSpec::stationary_e(CoefficientSequence(rationals_from_json(j.at("e"))), horizon, label);
    if (variant == "IntervalRho") {
      IntervalRho rho;
      for (const auto& item : j.at("rho"))
        rho.rho[{item.at("x").get<int>(), item.at("y").get<int>()}] =
            Rational::parse(item.at("value").get<std::string>());
      return OneDepSpec::interval_rho(std::move(rho), horizon, label);
    }
    throw ParameterError("unknown spec variant '" + variant + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("malformed spec file: ") + e.what());
  }
}

inline OneDepSpec read_spec(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("spec file is not JSON: ") + e.what());
  }
  return spec_from_json(j);
}

// row,col,value with positions as row/col labels.
inline void write_kernel_csv(std::ostream& out, const DenseKernel& k) {
  out << "row,col,value\n";
  for (long x = k.first_position(); x <= k.last_position(); ++x)
    for (long y = k.first_position(); y <= k.last_position(); ++y)
      out << x << ',' << y << ',' << k(x, y).str() << '\n';
}

inline DenseKernel read_kernel_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "row,col,value")
    throw ParameterError("kernel CSV needs the header row,col,value");
  std::vector<std::tuple<long, long, Rational>> entries;
  long lo = 0, hi = -1;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw ParameterError("bad kernel CSV line: " + line);
    const long x = std::stol(line.substr(0, c1));
    const long y = std::stol(line.substr(c1 + 1, c2 - c1 - 1));
    entries.emplace_back(x, y, Rational::parse(line.substr(c2 + 1)));
    if (first) {
      lo = hi = x;
      first = false;
    }
    lo = std::min({lo, x, y});
    hi = std::max({hi, x, y});
  }
  const auto size = static_cast<std::size_t>(hi - lo + 1);
  RationalMatrix m(size, size);
  for (const auto& [x, y, v] : entries)
    m(static_cast<std::size_t>(x - lo), static_cast<std::size_t>(y - lo)) = v;
  return DenseKernel(std::move(m), lo);
}

// {"order": n, "table": [[...]], "subgroup": [...], "reps": [...], "names": [...]}
inline Json to_json(const CentralExtensionSetup& s) {
  const FiniteGroup& g = s.group();
  Json j;
  j["order"] = g.order();
  j["table"] = g.table();
  j["subgroup"] = s.subgroup();
  j["reps"] = s.reps();
  Json names = Json::array();
  for (int a = 0; a < g.order(); ++a) names.push_back(g.name(a));
  j["names"] = names;
  return j;
}

inline CentralExtensionSetup setup_from_json(const Json& j) {
  try {
    const int order = j.at("order").get<int>();
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(table.size()) != order) throw SetupError("table size does not match order");
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    FiniteGroup g(std::move(table), std::move(names));
    return CentralExtensionSetup(std::move(g), j.at("subgroup").get<std::vector<int>>(),
                                 j.at("reps").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw SetupError(std::string("malformed group file: ") + e.what());
  }
}

inline CentralExtensionSetup read_setup(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw SetupError(std::string("group file is not JSON: ") + e.what());
  }
  return setup_from_json(j);
}

}  // namespace onedpp
