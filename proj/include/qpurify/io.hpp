// Copyright 2026 The qpurify Authors
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

// JSON state files.
//
// Bipartite:  {"d": 3, "alpha": [[...], [...], [...]]}
//             {"d": 3, "preset": "xz_mixture", "F": 0.6, "x_weight": 0.25}
// GHZ:        {"d": 2, "N": 3, "preset": "ghz_isotropic", "F": 0.9}
//             {"d": 2, "N": 3, "alpha": [...]}   (flat, phase index slowest)

#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpurify/multipartite.hpp"
#include "qpurify/states.hpp"

namespace qpurify {

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest round-trippable text is not the goal; output is fixed at 12 significant digits.
inline std::string format_number(double v) {
  char buf[40];
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace detail {

template <class T>
T json_get(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput(std::string("state file: missing \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput(std::string("state file: \"") + key + "\" has the wrong type");
  }
}

}  // namespace detail

inline nlohmann::json parse_json_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return ss.str();
}

inline CoeffMatrix coeffs_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("state file: top level must be an object");
  const Dimension d(detail::json_get<int>(j, "d"));
  if (j.contains("alpha")) {
    const auto rows = detail::json_get<std::vector<std::vector<double>>>(j, "alpha");
    if (rows.size() != size_t(d.value())) throw InvalidInput("state file: alpha needs d rows");
    std::vector<double> flat;
    for (const auto& r : rows) {
      if (r.size() != size_t(d.value())) throw InvalidInput("state file: alpha needs d columns");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return CoeffMatrix(d, std::move(flat));
  }
  if (j.contains("preset")) {
    StatePreset p;
    p.kind = parse_preset_kind(detail::json_get<std::string>(j, "preset"));
    p.F = detail::json_get<double>(j, "F");
    if (j.contains("x_weight")) p.x_weight = detail::json_get<double>(j, "x_weight");
    return make_preset(p, d);
  }
  throw InvalidInput("state file: need either \"alpha\" or \"preset\"");
}

inline nlohmann::json coeffs_to_json(const CoeffMatrix& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 0; k < s.d(); ++k) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < s.d(); ++j) row.push_back(s(k, j));
    rows.push_back(std::move(row));
  }
  return {{"d", s.d()}, {"alpha", std::move(rows)}};
}

inline GhzCoeffs ghz_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("state file: top level must be an object");
  const Dimension d(detail::json_get<int>(j, "d"));
  const int N = detail::json_get<int>(j, "N");
  if (j.contains("alpha")) return GhzCoeffs(d, N, detail::json_get<std::vector<double>>(j, "alpha"));
  if (j.contains("preset")) {
    const auto name = detail::json_get<std::string>(j, "preset");
    if (name != "ghz_isotropic") throw InvalidInput("state file: unknown GHZ preset '" + name + "'");
    return ghz_isotropic(d, N, detail::json_get<double>(j, "F"));
  }
  throw InvalidInput("state file: need either \"alpha\" or \"preset\"");
}

inline nlohmann::json ghz_to_json(const GhzCoeffs& s) {
  return {{"d", s.d()}, {"N", s.parties()}, {"alpha", std::vector<double>(s.data().begin(), s.data().end())}};
}

inline CoeffMatrix load_coeffs(const std::string& path) { return coeffs_from_json(parse_json_text(read_text_file(path))); }
inline GhzCoeffs load_ghz(const std::string& path) { return ghz_from_json(parse_json_text(read_text_file(path))); }

}  // namespace qpurify
