// Copyright 2026 The cvqt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Rectangular parameter sweeps over a resource family, evaluated point by
// point and serialized as CSV or JSON in a fixed row order.

#include <algorithm>
#include <charconv>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "cvqt/errors.hpp"
#include "cvqt/io.hpp"
#include "cvqt/resource_states.hpp"
#include "cvqt/teleport_criteria.hpp"

namespace cvqt {

inline constexpr std::size_t kMaxGridPoints = 4'000'000;

class GridTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

enum class Family { Tmst, Bs };
enum class OutputFormat { Csv, Json };

inline std::string_view to_string(Family f) { return f == Family::Tmst ? "tmst" : "bs"; }

/// Inclusive axis: steps points from min to max.
struct Axis {
  std::string name;
  double min = 0.0;
  double max = 1.0;
  int steps = 2;

  double value(int i) const {
    if (i == steps - 1) return max;
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
};

/// Parses "min:max:steps".
inline Axis parse_axis(std::string name, std::string_view text) {
  const auto bad = [&](const std::string& why) {
    return InvalidInput("axis " + name + " '" + std::string(text) + "': " + why);
  };
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos) {
    throw bad("expected min:max:steps");
  }
  Axis axis;
  axis.name = std::move(name);
  const auto parse_double = [&](std::string_view s) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(std::string(s), &used);
    } catch (const std::exception&) {
      throw bad("cannot parse '" + std::string(s) + "'");
    }
    if (used != s.size()) throw bad("trailing characters in '" + std::string(s) + "'");
    return x;
  };
  axis.min = parse_double(text.substr(0, c1));
  axis.max = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
  const std::string_view st = text.substr(c2 + 1);
  const auto [ptr, ec] = std::from_chars(st.data(), st.data() + st.size(), axis.steps);
  if (ec != std::errc() || ptr != st.data() + st.size()) throw bad("steps must be an integer");
  return axis;
}

struct SweepConfig {
  Family family = Family::Tmst;
  std::map<std::string, double> fixed;  // "r"
  Axis axis1;
  Axis axis2;
  std::string output_path;
  OutputFormat format = OutputFormat::Csv;

  std::size_t size() const {
    return static_cast<std::size_t>(axis1.steps) * static_cast<std::size_t>(axis2.steps);
  }

  /// Throws InvalidInput for bad axes or parameters, GridTooLarge when the
  /// grid exceeds kMaxGridPoints.
  void check() const;
};

/// Builds the resource state at one grid point.
inline CovMat build_state(const SweepConfig& cfg, double v1, double v2) {
  std::map<std::string, double> p = cfg.fixed;
  p[cfg.axis1.name] = v1;
  p[cfg.axis2.name] = v2;
  const auto get = [&](const char* key) {
    const auto it = p.find(key);
    if (it == p.end()) throw InvalidInput(std::string("missing parameter ") + key);
    return it->second;
  };
  if (cfg.family == Family::Tmst) return tmst(TmstSpec(get("r"), get("k1"), get("k2")));
  return bs_resource(BsSpec(get("r"), get("k"), get("T")));
}

inline void SweepConfig::check() const {
  const std::vector<std::string> names = family == Family::Tmst
                                             ? std::vector<std::string>{"k1", "k2"}
                                             : std::vector<std::string>{"k", "T"};
  for (const Axis* a : {&axis1, &axis2}) {
    if (std::find(names.begin(), names.end(), a->name) == names.end()) {
      throw InvalidInput("axis '" + a->name + "' is not valid for family " +
                         std::string(to_string(family)));
    }
    if (!(a->min < a->max)) throw InvalidInput("axis " + a->name + ": min must be < max");
    if (a->steps < 2) throw InvalidInput("axis " + a->name + ": steps must be >= 2");
  }
  if (axis1.name == axis2.name) throw InvalidInput("axes must differ");
  for (const auto& [key, value] : fixed) {
    if (key != "r") throw InvalidInput("unknown fixed parameter '" + key + "'");
  }
  if (size() > kMaxGridPoints) {
    throw GridTooLarge("grid of " + std::to_string(size()) + " points exceeds the limit of " +
                       std::to_string(kMaxGridPoints));
  }
  // Corner states exercise every parameter range check.
  build_state(*this, axis1.min, axis2.min);
  build_state(*this, axis1.max, axis2.max);
}

struct GridRow {
  double axis1 = 0.0;
  double axis2 = 0.0;
  CriteriaReport report;
  Classification label = Classification::Unphysical;
};

struct RegionGrid {
  SweepConfig config;
  std::vector<GridRow> rows;  // axis1-major, axis2 fastest
};

inline RegionGrid run_sweep(const SweepConfig& cfg, unsigned threads = 0) {
  cfg.check();
  RegionGrid grid{cfg, std::vector<GridRow>(cfg.size())};
  const int n2 = cfg.axis2.steps;
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      GridRow& row = grid.rows[idx];
      row.axis1 = cfg.axis1.value(static_cast<int>(idx / n2));
      row.axis2 = cfg.axis2.value(static_cast<int>(idx % n2));
      std::tie(row.report, row.label) = classify(build_state(cfg, row.axis1, row.axis2));
    }
  };
  const std::size_t n = grid.rows.size();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    work(0, n);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (std::size_t b = 0; b < n; b += chunk) pool.emplace_back(work, b, std::min(n, b + chunk));
  }
  return grid;
}

inline constexpr std::string_view kCsvHeader =
    "axis1,axis2,delta_epr,f_epr,det_m,fidelity,entangled,epr,qt,class";

inline void write_csv(const RegionGrid& grid, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const GridRow& row : grid.rows) {
    const CriteriaReport& r = row.report;
    out << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:d},{:d},{:d},{}\n",
                       row.axis1, row.axis2, r.delta_epr, r.f_epr, r.det_m, r.fidelity,
                       r.entangled ? 1 : 0, r.epr_correlated ? 1 : 0, r.qt ? 1 : 0,
                       to_string(row.label));
  }
}

inline JsonObject to_json_object(const Axis& a) {
  JsonObject o;
  o.string("name", a.name).number("min", a.min).number("max", a.max).raw("steps",
                                                                         std::to_string(a.steps));
  return o;
}

inline void write_json(const RegionGrid& grid, std::ostream& out) {
  JsonObject fixed;
  for (const auto& [k, v] : grid.config.fixed) fixed.number(k, v);
  JsonObject config;
  config.string("family", to_string(grid.config.family))
      .object("fixed", fixed)
      .object("axis1", to_json_object(grid.config.axis1))
      .object("axis2", to_json_object(grid.config.axis2));
  out << "{\"config\": " << config.str() << ",\n \"rows\": [\n";
  for (std::size_t i = 0; i < grid.rows.size(); ++i) {
    const GridRow& row = grid.rows[i];
    const CriteriaReport& r = row.report;
    JsonObject o;
    o.number("axis1", row.axis1)
        .number("axis2", row.axis2)
        .number("delta_epr", r.delta_epr)
        .number("f_epr", r.f_epr)
        .number("det_m", r.det_m)
        .number("fidelity", r.fidelity)
        .boolean("entangled", r.entangled)
        .boolean("epr", r.epr_correlated)
        .boolean("qt", r.qt)
        .string("class", to_string(row.label));
    out << "  " << o.str() << (i + 1 < grid.rows.size() ? ",\n" : "\n");
  }
  out << "]}\n";
}

}  // namespace cvqt
