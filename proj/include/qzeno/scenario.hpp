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

// Full experiments: exact propagation between scheduled interventions,
// observable sampling on a uniform grid, and QZE/AZE classification.

#include <algorithm>
#include <cmath>
#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qzeno/core.hpp"
#include "qzeno/diagnostics.hpp"
#include "qzeno/interventions.hpp"
#include "qzeno/models.hpp"
#include "qzeno/perturbation.hpp"
#include "qzeno/propagator.hpp"

namespace qz {

using IndexPair = std::pair<Index, Index>;

struct ScenarioSpec {
  ModelSpec model;
  InterventionSchedule schedule;
  double t_final = 1.0;
  double sample_dt = 0.1;
  std::vector<IndexPair> coherence_pairs;  // empty: (1,0) for the two-level model, none otherwise
  std::vector<Index> populations;          // empty: all levels

  std::vector<std::string> violations() const {
    std::vector<std::string> out = model.violations();
    const Index dim = model.dim();
    if (!(t_final > 0.0) || !std::isfinite(t_final)) out.emplace_back("run.t_final must be > 0");
    if (!(sample_dt > 0.0) || !std::isfinite(sample_dt)) out.emplace_back("run.sample_dt must be > 0");
    else if (sample_dt > t_final) out.emplace_back("run.sample_dt must not exceed run.t_final");
    for (std::size_t i = 0; i < schedule.size(); ++i) {
      const Intervention& iv = schedule.items()[i];
      const std::string at = "interventions[" + std::to_string(i) + "]";
      if (!(iv.time < t_final)) out.push_back(at + ".time must be < run.t_final");
      if (iv.target >= dim) out.push_back(at + ".target out of range");
    }
    for (std::size_t i = 0; i < coherence_pairs.size(); ++i) {
      auto [j, k] = coherence_pairs[i];
      if (j < 0 || k < 0 || j >= dim || k >= dim || j == k)
        out.push_back("output.coherence_pairs[" + std::to_string(i) + "] is not a valid off-diagonal pair");
    }
    for (std::size_t i = 0; i < populations.size(); ++i)
      if (populations[i] < 0 || populations[i] >= dim)
        out.push_back("output.populations[" + std::to_string(i) + "] out of range");
    return out;
  }

  void validate() const {
    const auto errs = violations();
    if (errs.empty()) return;
    std::string msg = "invalid scenario: " + errs.front();
    for (std::size_t i = 1; i < errs.size(); ++i) msg += "; " + errs[i];
    throw ValidationError(msg);
  }

  std::vector<IndexPair> effective_pairs() const {
    if (coherence_pairs.empty() && model.kind == ModelKind::TwoLevel) return {{1, 0}};
    return coherence_pairs;
  }
};

struct InterventionMarker {
  Intervention intervention;
  std::size_t pre_record = 0;
  std::size_t post_record = 0;
};

struct Trajectory {
  std::vector<ObservableRecord> records;
  std::vector<InterventionMarker> markers;

  std::vector<const ObservableRecord*> grid() const {
    std::vector<const ObservableRecord*> g;
    for (const auto& r : records)
      if (r.on_grid) g.push_back(&r);
    return g;
  }

  double last_intervention_time() const { return markers.empty() ? -INFINITY : markers.back().intervention.time; }
};

namespace detail {

// Extracts observables from a state held in the eigenbasis of H without
// rebuilding the full model-basis matrix.
class EigenObserver {
 public:
  EigenObserver(const SpectralData& spec, std::vector<Index> pops, std::vector<IndexPair> pairs)
      : spec_(spec), pops_(std::move(pops)), pairs_(std::move(pairs)) {
    if (pops_.empty())
      for (Index j = 0; j < spec.dim(); ++j) pops_.push_back(j);
    all_pops_ = static_cast<Index>(pops_.size()) == spec.dim();
  }

  const std::vector<Index>& populations() const { return pops_; }

  ObservableRecord operator()(const ComplexMatrix& rho_eig, double t) const {
    const RealMatrix& v = spec_.eigenvectors;
    ObservableRecord r;
    r.t = t;
    r.population_index = pops_;
    const RealMatrix re = rho_eig.real();
    if (all_pops_) {
      const RealMatrix z = v * re;
      const RealVector p = z.cwiseProduct(v).rowwise().sum();
      r.populations.assign(p.data(), p.data() + p.size());
    } else {
      for (Index j : pops_) r.populations.push_back(v.row(j).dot(re * v.row(j).transpose()));
    }
    // column 0 of rho = V (rho~ V^T e_0)
    const ComplexVector w = rho_eig * v.row(0).transpose().cast<Complex>();
    const ComplexVector col0 = v.cast<Complex>() * w;
    r.sigma = col0.tail(col0.size() - 1).imag().sum();
    for (auto [j, k] : pairs_) {
      const Complex c = (v.row(j).cast<Complex>() * rho_eig * v.row(k).transpose().cast<Complex>())(0, 0);
      r.coherences.push_back({j, k, c});
    }
    r.trace = rho_eig.diagonal().real().sum();
    r.purity = rho_eig.cwiseAbs2().sum();
    r.energy = spec_.eigenvalues.dot(rho_eig.diagonal().real());
    return r;
  }

 private:
  const SpectralData& spec_;
  std::vector<Index> pops_;
  std::vector<IndexPair> pairs_;
  bool all_pops_ = false;
};

inline bool same_time(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

inline SampleEvent pre_event(InterventionKind k) { return k == InterventionKind::Measure ? SampleEvent::PreMeasure : SampleEvent::PreFlip; }
inline SampleEvent post_event(InterventionKind k) { return k == InterventionKind::Measure ? SampleEvent::PostMeasure : SampleEvent::PostFlip; }

}  // namespace detail

/// Uniform sampling grid 0, dt, 2dt, ... plus t_final if the grid misses it.
inline std::vector<double> sample_grid(double t_final, double dt) {
  std::vector<double> g;
  const auto n = static_cast<long>(std::floor(t_final / dt + 1e-9));
  g.reserve(static_cast<std::size_t>(n) + 2);
  for (long i = 0; i <= n; ++i) g.push_back(static_cast<double>(i) * dt);
  if (!detail::same_time(g.back(), t_final)) g.push_back(t_final);
  return g;
}

inline Trajectory run(const ScenarioSpec& spec, const Model& model, const SpectralData& sd) {
  spec.validate();
  const std::vector<IndexPair> pairs = spec.effective_pairs();
  const detail::EigenObserver observe_eig(sd, spec.populations, pairs);
  Trajectory traj;

  double anchor_t = 0.0;
  ComplexMatrix anchor = to_eigenbasis(model.rho0.matrix(), sd);
  auto state_at = [&](double t) {
    ComplexMatrix r = anchor;
    rotate_phases(r, sd, t - anchor_t);
    return r;
  };

  auto next = spec.schedule.begin();
  for (double t : sample_grid(spec.t_final, spec.sample_dt)) {
    bool grid_is_post = false;
    while (next != spec.schedule.end() && (next->time < t || detail::same_time(next->time, t))) {
      const Intervention& iv = *next;
      const ComplexMatrix pre_eig = state_at(iv.time);
      InterventionMarker marker{iv, 0, 0};

      const HermitianMatrix rho_pre = HermitianMatrix::from_matrix(from_eigenbasis(pre_eig, sd), 1e-10);
      ObservableRecord pre = observe(rho_pre, model.hamiltonian, iv.time, observe_eig.populations(), pairs);
      pre.event = detail::pre_event(iv.kind);
      pre.on_grid = false;
      marker.pre_record = traj.records.size();
      traj.records.push_back(std::move(pre));

      const HermitianMatrix rho_post = apply(iv, rho_pre);
      anchor = to_eigenbasis(rho_post.matrix(), sd);
      anchor_t = iv.time;

      const bool tie = detail::same_time(iv.time, t);
      // taken from the model-basis state so exact zeros survive
      ObservableRecord post = observe(rho_post, model.hamiltonian, tie ? t : iv.time, observe_eig.populations(), pairs);
      post.event = detail::post_event(iv.kind);
      post.on_grid = tie;
      marker.post_record = traj.records.size();
      traj.records.push_back(std::move(post));
      traj.markers.push_back(marker);
      grid_is_post = grid_is_post || tie;
      ++next;
    }
    if (!grid_is_post) traj.records.push_back(observe_eig(state_at(t), t));
  }
  return traj;
}

inline Trajectory run(const ScenarioSpec& spec) {
  spec.validate();
  const Model model = build_model(spec.model);
  const SpectralData sd = eigendecompose(model.hamiltonian);
  return run(spec, model, sd);
}

/// Runs independent scenarios concurrently; results keep the input order.
inline std::vector<Trajectory> run_batch(const std::vector<ScenarioSpec>& specs) {
  std::vector<std::future<Trajectory>> jobs;
  jobs.reserve(specs.size());
  for (const auto& s : specs) jobs.push_back(std::async(std::launch::async, [&s] { return run(s); }));
  std::vector<Trajectory> out;
  out.reserve(specs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

/// Exact state at time t with every intervention at time <= t applied.
inline HermitianMatrix state_at(const Model& model, const SpectralData& sd, const InterventionSchedule& schedule, double t) {
  HermitianMatrix rho = model.rho0;
  double now = 0.0;
  for (const Intervention& iv : schedule) {
    if (iv.time > t) break;
    rho = apply(iv, evolve(rho, sd, iv.time - now));
    now = iv.time;
  }
  return evolve(rho, sd, t - now);
}

enum class Effect { QZE, AZE, Neutral };

inline std::string_view to_string(Effect e) {
  switch (e) {
    case Effect::QZE: return "QZE";
    case Effect::AZE: return "AZE";
    case Effect::Neutral: return "Neutral";
  }
  return "Neutral";
}

struct EffectVerdict {
  Effect effect = Effect::Neutral;
  double score = 0.0;  // <rho00>_intervened - <rho00>_reference over the window
};

inline constexpr double kEffectThreshold = 0.005;

/// Trapezoid time average of rho00 over on-grid samples in [t_a, t_b].
inline double windowed_rho00(const Trajectory& traj, double t_a, double t_b) {
  double area = 0.0;
  const ObservableRecord* prev = nullptr;
  for (const ObservableRecord* r : traj.grid()) {
    if (r->t < t_a - 1e-12 || r->t > t_b + 1e-12) continue;
    if (prev) area += 0.5 * (r->t - prev->t) * (r->population(0) + prev->population(0));
    prev = r;
  }
  if (!prev) throw ValidationError("windowed_rho00: no samples in window");
  double first = -1.0;
  for (const ObservableRecord* r : traj.grid())
    if (r->t >= t_a - 1e-12) {
      first = r->t;
      break;
    }
  const double span = prev->t - first;
  if (!(span > 0.0)) throw ValidationError("windowed_rho00: window holds fewer than two samples");
  return area / span;
}

/// Positive score: the intervened run keeps more population in level 0 (QZE).
inline EffectVerdict classify_effect(const Trajectory& reference, const Trajectory& intervened, double t_a, double t_b,
                                     double threshold = kEffectThreshold) {
  const auto gr = reference.grid();
  const auto gi = intervened.grid();
  if (gr.size() != gi.size()) throw ValidationError("classify_effect: trajectories use different sampling grids");
  for (std::size_t i = 0; i < gr.size(); ++i)
    if (!detail::same_time(gr[i]->t, gi[i]->t)) throw ValidationError("classify_effect: trajectories use different sampling grids");
  if (!(t_b > t_a)) throw ValidationError("classify_effect: empty window");
  if (t_a < intervened.last_intervention_time() - 1e-12 || t_a < reference.last_intervention_time() - 1e-12)
    throw ValidationError("classify_effect: window must start after the last intervention");

  EffectVerdict v;
  v.score = windowed_rho00(intervened, t_a, t_b) - windowed_rho00(reference, t_a, t_b);
  v.effect = v.score > threshold ? Effect::QZE : (v.score < -threshold ? Effect::AZE : Effect::Neutral);
  return v;
}

struct PredictorSample {
  double t = 0.0;
  SigmaMinimum minimum;
};

/// Sigma-minimum predictor re-evaluated with the populations of each on-grid record.
/// Every level population must be tracked.
inline std::vector<PredictorSample> predictor_along(const Trajectory& traj, const Model& model) {
  std::vector<PredictorSample> out;
  const RealVector e = model.level_energies();
  for (const ObservableRecord* r : traj.grid()) {
    if (static_cast<Index>(r->populations.size()) != model.dim())
      throw ValidationError("predictor_along: trajectory does not track every population");
    RealVector p(model.dim());
    for (std::size_t i = 0; i < r->populations.size(); ++i) p[r->population_index[i]] = r->populations[i];
    out.push_back({r->t, sigma_min_predictor(channel_inputs(e, p, model.spec.v))});
  }
  return out;
}

}  // namespace qz
