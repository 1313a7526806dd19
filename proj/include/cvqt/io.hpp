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

// Serialization: the covariance-matrix JSON schema and the criteria report.

#include <fmt/format.h>

#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cvqt/errors.hpp"
#include "cvqt/gaussian_core.hpp"
#include "cvqt/teleport_criteria.hpp"
#include "json.hpp"

namespace cvqt {

inline constexpr std::string_view kConvention = "xpxp-vac-half";

/// Schema violation in an input document; field() names the offending key.
class SchemaError : public InvalidInput {
 public:
  SchemaError(std::string field, const std::string& what)
      : InvalidInput("field '" + field + "': " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// {"convention": "xpxp-vac-half", "matrix": [[..4..], x4]} (row major).
inline CovMat covmat_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw SchemaError("<root>", "expected a JSON object");
  if (!doc.contains("convention")) throw SchemaError("convention", "missing");
  const auto& conv = doc["convention"];
  if (!conv.is_string() || conv.get<std::string>() != kConvention) {
    throw SchemaError("convention", "expected \"" + std::string(kConvention) + "\", got " +
                                        conv.dump());
  }
  if (!doc.contains("matrix")) throw SchemaError("matrix", "missing");
  const auto& rows = doc["matrix"];
  if (!rows.is_array() || rows.size() != 4) throw SchemaError("matrix", "expected 4 rows");
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != 4) {
      throw SchemaError("matrix", fmt::format("row {} must have 4 entries", i));
    }
    for (int j = 0; j < 4; ++j) {
      if (!row[j].is_number()) {
        throw SchemaError("matrix", fmt::format("entry [{}][{}] is not a number", i, j));
      }
      m(i, j) = row[j].get<double>();
    }
  }
  if (!m.allFinite()) throw SchemaError("matrix", "entries must be finite");
  return CovMat(m);
}

inline CovMat covmat_from_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("<root>", std::string("not valid JSON: ") + e.what());
  }
  return covmat_from_json(doc);
}

inline nlohmann::json covmat_to_json(const CovMat& v) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 4; ++i) {
    rows.push_back({v(i, 0), v(i, 1), v(i, 2), v(i, 3)});
  }
  return {{"convention", kConvention}, {"matrix", rows}};
}

inline std::string format_number(double x) { return fmt::format("{:.17g}", x); }

/// Minimal ordered JSON object writer; numbers are written with 17
/// significant digits.
class JsonObject {
 public:
  JsonObject& number(std::string key, double x) {
    fields_.emplace_back(std::move(key), format_number(x));
    return *this;
  }
  JsonObject& boolean(std::string key, bool b) {
    fields_.emplace_back(std::move(key), b ? "true" : "false");
    return *this;
  }
  JsonObject& string(std::string key, std::string_view s) {
    fields_.emplace_back(std::move(key), nlohmann::json(std::string(s)).dump());
    return *this;
  }
  JsonObject& object(std::string key, const JsonObject& o) {
    fields_.emplace_back(std::move(key), o.str());
    return *this;
  }
  JsonObject& raw(std::string key, std::string value) {
    fields_.emplace_back(std::move(key), std::move(value));
    return *this;
  }

  std::string str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      if (i) out += ", ";
      out += nlohmann::json(fields_[i].first).dump();
      out += ": ";
      out += fields_[i].second;
    }
    out += "}";
    return out;
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

inline JsonObject to_json_object(const CriteriaReport& r) {
  JsonObject o;
  o.number("delta_epr", r.delta_epr)
      .number("f_epr", r.f_epr)
      .number("det_m", r.det_m)
      .number("fidelity", r.fidelity)
      .boolean("entangled", r.entangled)
      .boolean("epr_correlated", r.epr_correlated)
      .boolean("qt", r.qt);
  return o;
}

inline std::string to_json(const CriteriaReport& r) { return to_json_object(r).str(); }

inline JsonObject to_json_object(const CanonicalParams& p) {
  JsonObject o;
  o.number("eta", p.eta).number("zeta", p.zeta).number("c1", p.c1).number("c2", p.c2);
  return o;
}

inline JsonObject to_json_object(const EntanglementVerdict& v) {
  JsonObject o;
  o.number("simon_lhs", v.simon_lhs)
      .boolean("simon_entangled", v.simon_entangled)
      .number("ppt_nu_minus", v.ppt_nu_minus)
      .boolean("ppt_entangled", v.ppt_entangled);
  return o;
}

inline JsonObject to_json_object(const ValidityReport& v) {
  JsonObject o;
  o.boolean("symmetric", v.symmetric)
      .boolean("positive_definite", v.positive_definite)
      .number("nu_minus", v.nu_minus)
      .number("nu_plus", v.nu_plus)
      .boolean("physical", v.physical);
  return o;
}

}  // namespace cvqt
