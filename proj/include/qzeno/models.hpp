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

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "qzeno/core.hpp"

namespace qz {

enum class ModelKind { TwoLevel, LevelInContinuum, LevelOutsideContinuum, CustomContinuum };

inline std::string_view to_string(ModelKind k) {
  switch (k) {
    case ModelKind::TwoLevel: return "two_level";
    case ModelKind::LevelInContinuum: return "lic";
    case ModelKind::LevelOutsideContinuum: return "loc";
    case ModelKind::CustomContinuum: return "custom_continuum";
  }
  return "?";
}

inline bool is_continuum(ModelKind k) { return k != ModelKind::TwoLevel; }

/// Declarative model parameters, all energies in hartree.
///
/// Two-level: H = eps0|0><0| + eps1|1><1| + v(|0><1| + |1><0|).
/// Continuum kinds: a discrete level eps0 coupled with the same v to each of
/// `n_levels` equidistant levels centred on zero with step `spacing`.
/// The LIC/LOC presets put the band edges exactly at +-d.
struct ModelSpec {
  ModelKind kind = ModelKind::TwoLevel;
  double eps0 = -0.2;
  double eps1 = 0.2;
  double v = 0.2;
  double d = 0.0;
  int n_levels = 0;
  double spacing = 0.0;

  static ModelSpec two_level(double eps0 = -0.2, double eps1 = 0.2, double v = 0.2) {
    return ModelSpec{ModelKind::TwoLevel, eps0, eps1, v, 0.0, 0, 0.0};
  }

  static ModelSpec level_in_continuum(double v = 0.01, double d = 5.0, int n = 200) {
    return ModelSpec{ModelKind::LevelInContinuum, 0.0, 0.0, v, d, n, 2.0 * d / (n - 1)};
  }

  static ModelSpec level_outside_continuum(double v = 0.01, double d = 5.0, int n = 200, double offset = 0.04) {
    return ModelSpec{ModelKind::LevelOutsideContinuum, d + offset, 0.0, v, d, n, 2.0 * d / (n - 1)};
  }

  static ModelSpec custom_continuum(double eps0, double d, int n, double spacing, double v) {
    return ModelSpec{ModelKind::CustomContinuum, eps0, 0.0, v, d, n, spacing};
  }

  Index dim() const { return kind == ModelKind::TwoLevel ? 2 : static_cast<Index>(n_levels) + 1; }

  /// Violations as human-readable strings; empty when valid.
  std::vector<std::string> violations(bool allow_zero_coupling = false) const {
    std::vector<std::string> out;
    if (!std::isfinite(v) || v < 0.0 || (!allow_zero_coupling && v == 0.0))
      out.emplace_back(allow_zero_coupling ? "model.v must be >= 0" : "model.v must be > 0");
    if (!std::isfinite(eps0)) out.emplace_back("model.eps0 must be finite");
    if (kind == ModelKind::TwoLevel) {
      if (!std::isfinite(eps1)) out.emplace_back("model.eps1 must be finite");
      return out;
    }
    if (!(d > 0.0) || !std::isfinite(d)) out.emplace_back("model.d must be > 0");
    if (n_levels < 2) out.emplace_back("model.n_levels must be >= 2");
    if (!(spacing > 0.0) || !std::isfinite(spacing)) out.emplace_back("model.spacing must be > 0");
    if (n_levels >= 2 && spacing > 0.0 && (n_levels - 1) * spacing > 2.0 * d + 1e-9)
      out.emplace_back("model: (n_levels - 1) * spacing exceeds the band width 2d");
    return out;
  }

  void validate(bool allow_zero_coupling = false) const {
    const auto errs = violations(allow_zero_coupling);
    if (errs.empty()) return;
    std::string msg = errs.front();
    for (std::size_t i = 1; i < errs.size(); ++i) msg += "; " + errs[i];
    throw ParameterError(msg);
  }
};

struct Model {
  ModelSpec spec;
  RealMatrix hamiltonian;
  HermitianMatrix rho0;

  Index dim() const { return hamiltonian.rows(); }
  /// Diagonal of H (uncoupled level energies).
  RealVector level_energies() const { return hamiltonian.diagonal(); }
};

/// eps_k = -(n-1) spacing / 2 + k spacing, k = 0..n-1.
inline RealVector continuum_grid(int n, double spacing) {
  RealVector e(n);
  const double start = -0.5 * (n - 1) * spacing;
  for (int k = 0; k < n; ++k) e[k] = start + k * spacing;
  return e;
}

/// Uncoupled level energies (diagonal of H) without building the Hamiltonian.
inline RealVector level_energies(const ModelSpec& spec) {
  if (spec.kind == ModelKind::TwoLevel) return (RealVector(2) << spec.eps0, spec.eps1).finished();
  RealVector e(spec.dim());
  e[0] = spec.eps0;
  e.tail(spec.n_levels) = continuum_grid(spec.n_levels, spec.spacing);
  return e;
}

inline Model build_two_level(double eps0, double eps1, double v) {
  ModelSpec spec = ModelSpec::two_level(eps0, eps1, v);
  spec.validate();
  RealMatrix h(2, 2);
  h << eps0, v, v, eps1;
  return Model{spec, h, HermitianMatrix::projector(2, 0)};
}

inline Model build_continuum(const ModelSpec& spec) {
  if (!is_continuum(spec.kind)) throw ParameterError("build_continuum: not a continuum model");
  spec.validate();
  const Index dim = spec.dim();
  RealMatrix h = RealMatrix::Zero(dim, dim);
  h(0, 0) = spec.eps0;
  h.diagonal().tail(spec.n_levels) = continuum_grid(spec.n_levels, spec.spacing);
  h.row(0).tail(spec.n_levels).setConstant(spec.v);
  h.col(0).tail(spec.n_levels).setConstant(spec.v);
  return Model{spec, h, HermitianMatrix::projector(dim, 0)};
}

inline Model build_continuum(double eps0, double d, int n, double spacing, double v) {
  return build_continuum(ModelSpec::custom_continuum(eps0, d, n, spacing, v));
}

inline Model build_model(const ModelSpec& spec) {
  if (spec.kind == ModelKind::TwoLevel) return build_two_level(spec.eps0, spec.eps1, spec.v);
  return build_continuum(spec);
}

}  // namespace qz
