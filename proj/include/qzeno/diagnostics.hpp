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

// Observables and the exact rate identities
//   d rho_jj / dt   = sum_{k != j} 2 H_jk Im rho_kj
//   d Re rho_jk / dt = (eps_j - eps_k) Im rho_jk
//   d Im rho_jk / dt = (rho_jj - rho_kk) H_jk - (eps_j - eps_k) Re rho_jk
// for real symmetric H and d rho/dt = -i[H, rho].

#include <cmath>
#include <string>
#include <vector>

#include "qzeno/core.hpp"
#include "qzeno/propagator.hpp"

namespace qz {

inline constexpr double kFiniteDifferenceStep = 1e-6;

/// Sigma = sum_{k>=1} Im rho_k0. Negative while population leaves level 0,
/// and d rho00/dt = 2 v Sigma when every k couples to 0 with strength v.
inline double sigma(const HermitianMatrix& rho) {
  double s = 0.0;
  for (Index k = 1; k < rho.dim(); ++k) s += rho(k, 0).imag();
  return s;
}

struct CoherenceSample {
  Index j = 0;
  Index k = 0;
  Complex value;
};

enum class SampleEvent { None, PreMeasure, PostMeasure, PreFlip, PostFlip };

inline std::string_view to_string(SampleEvent e) {
  switch (e) {
    case SampleEvent::None: return "none";
    case SampleEvent::PreMeasure: return "pre_measure";
    case SampleEvent::PostMeasure: return "post_measure";
    case SampleEvent::PreFlip: return "pre_flip";
    case SampleEvent::PostFlip: return "post_flip";
  }
  return "none";
}

struct ObservableRecord {
  double t = 0.0;
  SampleEvent event = SampleEvent::None;
  bool on_grid = true;              // false for pre-intervention rows and off-grid post rows
  std::vector<Index> population_index;
  std::vector<double> populations;  // populations[i] = rho_{idx,idx}, idx = population_index[i]
  double sigma = 0.0;
  std::vector<CoherenceSample> coherences;
  double trace = 0.0;
  double purity = 0.0;
  double energy = 0.0;

  double population(Index j) const {
    for (std::size_t i = 0; i < population_index.size(); ++i)
      if (population_index[i] == j) return populations[i];
    throw ParameterError("ObservableRecord: population " + std::to_string(j) + " not tracked");
  }
};

inline ObservableRecord observe(const HermitianMatrix& rho, const RealMatrix& h, double t,
                                const std::vector<Index>& population_index,
                                const std::vector<std::pair<Index, Index>>& pairs) {
  ObservableRecord r;
  r.t = t;
  r.population_index = population_index;
  if (r.population_index.empty())
    for (Index j = 0; j < rho.dim(); ++j) r.population_index.push_back(j);
  for (Index j : r.population_index) r.populations.push_back(rho(j, j).real());
  r.sigma = sigma(rho);
  for (auto [j, k] : pairs) r.coherences.push_back({j, k, rho(j, k)});
  r.trace = rho.trace();
  r.purity = rho.purity();
  r.energy = (h.array() * rho.matrix().real().array()).sum();  // H is real symmetric
  return r;
}

/// sum_{k != j} 2 H_jk Im rho_kj
inline double population_rate(const HermitianMatrix& rho, const RealMatrix& h, Index j) {
  double s = 0.0;
  for (Index k = 0; k < rho.dim(); ++k)
    if (k != j) s += 2.0 * h(j, k) * rho(k, j).imag();
  return s;
}

/// Central difference (rho(delta) - rho(-delta)) / (2 delta) of the exact trajectory through rho.
inline ComplexMatrix finite_difference_rate(const HermitianMatrix& rho, const SpectralData& spec,
                                            double delta = kFiniteDifferenceStep) {
  if (rho.dim() != spec.dim()) throw DimensionError("finite_difference_rate", rho.dim(), rho.dim(), spec.dim(), spec.dim());
  const ComplexMatrix base = to_eigenbasis(rho.matrix(), spec);
  ComplexMatrix fwd = base;
  ComplexMatrix bwd = base;
  rotate_phases(fwd, spec, delta);
  rotate_phases(bwd, spec, -delta);
  return from_eigenbasis(fwd - bwd, spec) / (2.0 * delta);
}

/// |FD d rho_jj/dt - sum_k 2 H_jk Im rho_kj| for every j.
inline RealVector population_rate_residuals(const HermitianMatrix& rho, const SpectralData& spec, const RealMatrix& h) {
  const ComplexMatrix fd = finite_difference_rate(rho, spec);
  RealVector out(rho.dim());
  for (Index j = 0; j < rho.dim(); ++j) out[j] = std::abs(fd(j, j).real() - population_rate(rho, h, j));
  return out;
}

inline double population_rate_residual(const HermitianMatrix& rho, const SpectralData& spec, const RealMatrix& h, Index j) {
  if (j < 0 || j >= rho.dim()) throw ParameterError("population_rate_residual: index out of range");
  const ComplexMatrix fd = finite_difference_rate(rho, spec);
  return std::abs(fd(j, j).real() - population_rate(rho, h, j));
}

inline double population_rate_residual(const HermitianMatrix& rho, const RealMatrix& h, Index j) {
  return population_rate_residual(rho, eigendecompose(h), h, j);
}

/// Rates of Re/Im rho_jk. `d_re`/`d_im` are the full rates; the `spectator_*`
/// parts come from couplings of j or k to third levels and vanish for a
/// two-level system.
struct CoherenceRate {
  double d_re = 0.0;
  double d_im = 0.0;
  double spectator_re = 0.0;
  double spectator_im = 0.0;
};

inline CoherenceRate coherence_rate(const HermitianMatrix& rho, const RealMatrix& h, Index j, Index k) {
  const Index n = rho.dim();
  if (h.rows() != n || h.cols() != n) throw DimensionError("coherence_rate", h.rows(), h.cols(), n, n);
  if (j < 0 || k < 0 || j >= n || k >= n || j == k) throw ParameterError("coherence_rate: invalid pair");
  const double v = h(j, k);
  if (v == 0.0 && j != 0 && k != 0)
    throw UnsupportedPairError("coherence_rate: levels " + std::to_string(j) + " and " + std::to_string(k) +
                               " are not directly coupled");

  const double de = h(j, j) - h(k, k);
  const Complex c = rho(j, k);
  // S = sum_{l != j,k} (H_jl rho_lk - rho_jl H_lk); d rho_jk/dt picks up -i S.
  Complex s{0.0, 0.0};
  for (Index l = 0; l < n; ++l) {
    if (l == j || l == k) continue;
    s += h(j, l) * rho(l, k) - rho(j, l) * h(l, k);
  }
  CoherenceRate r;
  r.spectator_re = s.imag();
  r.spectator_im = -s.real();
  r.d_re = de * c.imag() + r.spectator_re;
  r.d_im = (rho(j, j).real() - rho(k, k).real()) * v - de * c.real() + r.spectator_im;
  return r;
}

/// max(|FD Re - d_re|, |FD Im - d_im|) against a precomputed finite-difference rate.
inline double coherence_rate_residual(const ComplexMatrix& fd_rate, const HermitianMatrix& rho, const RealMatrix& h,
                                      Index j, Index k) {
  const CoherenceRate r = coherence_rate(rho, h, j, k);
  return std::max(std::abs(fd_rate(j, k).real() - r.d_re), std::abs(fd_rate(j, k).imag() - r.d_im));
}

inline double coherence_rate_residual(const HermitianMatrix& rho, const SpectralData& spec, const RealMatrix& h, Index j,
                                      Index k) {
  return coherence_rate_residual(finite_difference_rate(rho, spec), rho, h, j, k);
}

}  // namespace qz
