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

// Low-order perturbation theory for a level coupled to other levels with a
// single constant coupling v.
//
// Convention: V_I(tau) = e^{+iH0 tau} V e^{-iH0 tau}, hence
//   <s|V_I(tau)|s'> = v exp(i (eps_s - eps_s') tau).
// With rho(0) = |0><0| this makes the first-order Im rho_10 negative, which is
// the sign that drives forward transfer 0 -> 1 under d rho00/dt = 2 v Im rho10.
// All time integrals are closed forms; the de -> 0 limits are analytic.

#include <cmath>
#include <complex>
#include <vector>

#include "qzeno/core.hpp"
#include "qzeno/models.hpp"

namespace qz {

/// int_0^t exp(i de tau) d tau
inline Complex phase_integral(double de, double t) {
  const double x = de * t;
  if (std::abs(x) < 1e-8) return t * Complex(1.0 - x * x / 6.0, 0.5 * x);
  const double s = std::sin(0.5 * x);
  return t * Complex(std::sin(x) / x, 2.0 * s * s / x);
}

/// sin(de t) / de, equal to t at de = 0.
inline double sine_ratio(double de, double t) {
  const double x = de * t;
  if (std::abs(x) < 1e-8) return t * (1.0 - x * x / 6.0);
  return std::sin(x) / de;
}

/// First-order population change of |s> fed by the coherence rho_{s's}(0).
/// `de` = eps_s - eps_s'.
inline double pop_from_coherence_1st(Complex coh0, double de, double v, double t) {
  return 2.0 * std::imag(coh0 * v * phase_integral(de, t));
}

/// First-order interaction-picture coherence rho_{ss'}(t) created from
/// `pop_diff` = rho_ss(0) - rho_s's'(0). `de` = eps_s - eps_s'.
inline Complex coherence_from_pop_1st(double pop_diff, double de, double v, double t) {
  return Complex(0.0, 1.0) * pop_diff * v * phase_integral(de, t);
}

/// Second-order population change of |s> through the population channel.
/// `pop_diff` = rho_s's'(0) - rho_ss(0) (partner minus self), so population
/// flows towards the emptier level:
///   pop_diff * 4 v^2 sin^2(de t / 2) / de^2   (pop_diff v^2 t^2 at de = 0).
inline double pop_from_pop_2nd(double pop_diff, double de, double v, double t) {
  return pop_diff * std::norm(v * phase_integral(de, t));
}

/// rho00(t) to second order for a model starting in |0><0|.
inline double rho00_perturbative(const Model& model, double t) {
  const RealVector e = model.level_energies();
  double rho = 1.0;
  for (Index k = 1; k < e.size(); ++k) rho += pop_from_pop_2nd(-1.0, e[k] - e[0], model.spec.v, t);
  return rho;
}

inline double rho00_perturbative(const ModelSpec& spec, double t) { return rho00_perturbative(build_model(spec), t); }

/// Delta rho_k = rho_kk - rho_00 and Delta eps_k = eps_k - eps_0 for k >= 1.
struct ChannelInputs {
  std::vector<double> delta_rho;
  std::vector<double> delta_eps;
  double v = 0.0;

  void validate() const {
    if (delta_rho.size() != delta_eps.size())
      throw DimensionError("ChannelInputs: delta_rho has " + std::to_string(delta_rho.size()) + " entries, delta_eps " +
                           std::to_string(delta_eps.size()));
    for (double r : delta_rho)
      if (!(r >= -1.0 - 1e-12 && r <= 1.0 + 1e-12)) throw ParameterError("ChannelInputs: delta_rho outside [-1, 1]");
  }
};

/// Builds channel inputs from level energies and populations (index 0 = discrete level).
inline ChannelInputs channel_inputs(const RealVector& energies, const RealVector& populations, double v) {
  if (energies.size() != populations.size() || energies.size() < 2)
    throw DimensionError("channel_inputs", energies.size(), 1, populations.size(), 1);
  ChannelInputs in;
  in.v = v;
  for (Index k = 1; k < energies.size(); ++k) {
    in.delta_rho.push_back(populations[k] - populations[0]);
    in.delta_eps.push_back(energies[k] - energies[0]);
  }
  return in;
}

inline ChannelInputs channel_inputs(const Model& model, const RealVector& populations) {
  return channel_inputs(model.level_energies(), populations, model.spec.v);
}

/// Sigma^(1)(t) = v sum_k Delta rho_k sin(Delta eps_k t) / Delta eps_k
inline double sigma_first_order(const ChannelInputs& in, double t) {
  in.validate();
  double s = 0.0;
  for (std::size_t k = 0; k < in.delta_rho.size(); ++k) s += in.delta_rho[k] * sine_ratio(in.delta_eps[k], t);
  return in.v * s;
}

struct SigmaMinimum {
  double t_min = 0.0;
  double sigma_min = 0.0;
};

/// First minimum of Sigma^(1) from the cubic Taylor expansion of the sines:
///   t_min = sqrt(2 |S0| / |S2|),  Sigma_min = -(v/3) |2 S0|^{3/2} / |S2|^{1/2}
/// with S0 = sum Delta rho_k and S2 = sum Delta rho_k Delta eps_k^2.
inline SigmaMinimum sigma_min_predictor(const ChannelInputs& in) {
  in.validate();
  double s0 = 0.0;
  double s2 = 0.0;
  for (std::size_t k = 0; k < in.delta_rho.size(); ++k) {
    s0 += in.delta_rho[k];
    s2 += in.delta_rho[k] * in.delta_eps[k] * in.delta_eps[k];
  }
  if (s2 == 0.0) throw DegenerateSpectrumError("sigma_min_predictor: sum of delta_rho * delta_eps^2 vanishes");
  SigmaMinimum m;
  m.t_min = std::sqrt(2.0 * std::abs(s0) / std::abs(s2));
  m.sigma_min = -(in.v / 3.0) * std::pow(std::abs(2.0 * s0), 1.5) / std::sqrt(std::abs(s2));
  return m;
}

}  // namespace qz
