// Copyright 2026 The qzeno Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON scenario configuration.
//
//   {
//     "model": {"kind": "two_level", "v": 0.2, "eps0": -0.2, "eps1": 0.2},
//     "run": {"t_final": 6.0, "sample_dt": 0.01},
//     "interventions": [{"time": 1.0, "kind": "measure"}],
//     "output": {"path": "out.csv", "coherence_pairs": [[1, 0]], "populations": [0, 1]}
//   }
//
// model.kind is one of two_level | lic | loc | custom_continuum. Unknown keys
// anywhere are rejected.

#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qzeno/scenario.hpp"

namespace qz::cli {

/// Malformed document: syntax, wrong types, unknown or missing keys.
class ParseError : public Error {
 public:
  using Error::Error;
};

struct ConfigDocument {
  ScenarioSpec scenario;
  bool has_run = false;
  std::optional<std::string> output_path;
};

namespace detail {

using nlohmann::json;

inline void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
}

inline void reject_unknown(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw ParseError(where + "." + it.key() + ": unknown key");
  }
}

inline double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  return j.get<double>();
}

inline std::optional<double> opt_number(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) return std::nullopt;
  return number(obj.at(key), where + "." + key);
}

inline Index integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<Index>();
}

inline ModelSpec parse_model(const json& j) {
  require_object(j, "model");
  if (!j.contains("kind") || !j.at("kind").is_string()) throw ParseError("model.kind: expected a string");
  const std::string kind = j.at("kind").get<std::string>();
  const auto num = [&](const char* key) { return opt_number(j, key, "model"); };

  if (kind == "two_level") {
    reject_unknown(j, "model", {"kind", "v", "eps0", "eps1"});
    return ModelSpec::two_level(num("eps0").value_or(-0.2), num("eps1").value_or(0.2), num("v").value_or(0.2));
  }
  reject_unknown(j, "model", {"kind", "v", "eps0", "d", "n_levels", "spacing"});
  int n = 200;
  if (j.contains("n_levels")) n = static_cast<int>(integer(j.at("n_levels"), "model.n_levels"));
  const double d = num("d").value_or(5.0);
  const double v = num("v").value_or(0.01);
  const double edge_spacing = n > 1 ? 2.0 * d / (n - 1) : 0.0;
  ModelSpec m;
  if (kind == "lic") {
    m = ModelSpec::level_in_continuum(v, d, n);
    m.eps0 = num("eps0").value_or(0.0);
  } else if (kind == "loc") {
    m = ModelSpec::level_outside_continuum(v, d, n);
    m.eps0 = num("eps0").value_or(d + 0.04);
  } else if (kind == "custom_continuum") {
    for (const char* key : {"eps0", "spacing"})
      if (!j.contains(key)) throw ParseError(std::string("model.") + key + ": required for custom_continuum");
    m = ModelSpec::custom_continuum(*num("eps0"), d, n, *num("spacing"), v);
    return m;
  } else {
    throw ParseError("model.kind: unknown model kind '" + kind + "'");
  }
  m.n_levels = n;
  m.spacing = num("spacing").value_or(edge_spacing);
  return m;
}

inline Intervention parse_intervention(const json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown(j, where, {"time", "kind", "target"});
  if (!j.contains("time")) throw ParseError(where + ".time: required");
  if (!j.contains("kind") || !j.at("kind").is_string()) throw ParseError(where + ".kind: expected a string");
  Intervention iv;
  iv.time = number(j.at("time"), where + ".time");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "measure") iv.kind = InterventionKind::Measure;
  else if (kind == "sign_flip") iv.kind = InterventionKind::SignFlip;
  else throw ParseError(where + ".kind: expected 'measure' or 'sign_flip'");
  if (j.contains("target")) iv.target = integer(j.at("target"), where + ".target");
  return iv;
}

inline std::string locate(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace detail

/// Parses a config document. Structural problems raise ParseError; value
/// checks (ranges, ordering) raise ValidationError. With `model_only` the run
/// section may be absent and a zero coupling is accepted.
inline ConfigDocument parse_config(const std::string& text, bool model_only = false) {
  using detail::json;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("syntax error at " + detail::locate(text, e.byte) + ": " + e.what());
  }
  detail::require_object(root, "document");
  detail::reject_unknown(root, "document", {"model", "run", "interventions", "output"});
  if (!root.contains("model")) throw ParseError("model: required section missing");

  ConfigDocument doc;
  doc.scenario.model = detail::parse_model(root.at("model"));

  if (root.contains("run")) {
    const json& run = root.at("run");
    detail::require_object(run, "run");
    detail::reject_unknown(run, "run", {"t_final", "sample_dt"});
    for (const char* key : {"t_final", "sample_dt"})
      if (!run.contains(key)) throw ParseError(std::string("run.") + key + ": required");
    doc.scenario.t_final = detail::number(run.at("t_final"), "run.t_final");
    doc.scenario.sample_dt = detail::number(run.at("sample_dt"), "run.sample_dt");
    doc.has_run = true;
  } else if (!model_only) {
    throw ParseError("run: required section missing");
  }

  std::vector<Intervention> items;
  if (root.contains("interventions")) {
    const json& list = root.at("interventions");
    if (!list.is_array()) throw ParseError("interventions: expected an array");
    for (std::size_t i = 0; i < list.size(); ++i)
      items.push_back(detail::parse_intervention(list[i], "interventions[" + std::to_string(i) + "]"));
  }

  if (root.contains("output")) {
    const json& out = root.at("output");
    detail::require_object(out, "output");
    detail::reject_unknown(out, "output", {"path", "coherence_pairs", "populations"});
    if (out.contains("path")) {
      if (!out.at("path").is_string()) throw ParseError("output.path: expected a string");
      doc.output_path = out.at("path").get<std::string>();
    }
    if (out.contains("coherence_pairs")) {
      const json& pairs = out.at("coherence_pairs");
      if (!pairs.is_array()) throw ParseError("output.coherence_pairs: expected an array");
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const std::string where = "output.coherence_pairs[" + std::to_string(i) + "]";
        if (!pairs[i].is_array() || pairs[i].size() != 2) throw ParseError(where + ": expected [j, k]");
        doc.scenario.coherence_pairs.emplace_back(detail::integer(pairs[i][0], where), detail::integer(pairs[i][1], where));
      }
    }
    if (out.contains("populations")) {
      const json& pops = out.at("populations");
      if (!pops.is_array()) throw ParseError("output.populations: expected an array");
      for (std::size_t i = 0; i < pops.size(); ++i)
        doc.scenario.populations.push_back(detail::integer(pops[i], "output.populations[" + std::to_string(i) + "]"));
    }
  }

  // Value validation.
  doc.scenario.schedule = InterventionSchedule(std::move(items));
  if (model_only) {
    doc.scenario.model.validate(/*allow_zero_coupling=*/true);
  } else {
    doc.scenario.validate();
  }
  return doc;
}

inline ConfigDocument load_config(const std::string& path, bool model_only = false) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), model_only);
}

}  // namespace qz::cli
