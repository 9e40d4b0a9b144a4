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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qzeno/core.hpp"

namespace qz {

enum class InterventionKind { Measure, SignFlip };

inline std::string_view to_string(InterventionKind k) {
  return k == InterventionKind::Measure ? "measure" : "sign_flip";
}

struct Intervention {
  double time = 0.0;
  InterventionKind kind = InterventionKind::Measure;
  Index target = 0;  // only SignFlip uses it; Measure dephases the whole basis
};

/// Interventions with strictly increasing times.
class InterventionSchedule {
 public:
  InterventionSchedule() = default;
  explicit InterventionSchedule(std::vector<Intervention> items) : items_(std::move(items)) {
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (!(items_[i].time >= 0.0)) throw ValidationError("interventions[" + std::to_string(i) + "].time must be >= 0");
      if (items_[i].target < 0) throw ValidationError("interventions[" + std::to_string(i) + "].target must be >= 0");
      if (i > 0 && !(items_[i].time > items_[i - 1].time))
        throw ValidationError("interventions[" + std::to_string(i) + "].time must be strictly greater than the previous time");
    }
  }

  static InterventionSchedule at(const std::vector<double>& times, InterventionKind kind, Index target = 0) {
    std::vector<Intervention> items;
    items.reserve(times.size());
    for (double t : times) items.push_back({t, kind, target});
    return InterventionSchedule(std::move(items));
  }

  const std::vector<Intervention>& items() const noexcept { return items_; }
  bool empty() const noexcept { return items_.empty(); }
  std::size_t size() const noexcept { return items_.size(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

 private:
  std::vector<Intervention> items_;
};

inline void check_intervention_input(const HermitianMatrix& rho, const char* what) {
  const double herm = hermiticity_residual(rho.matrix());
  const double tr = std::abs(rho.trace() - 1.0);
  if (!(herm <= kHermiticityTol) || !(tr <= kTraceTol))
    throw ValidationError(std::string(what) + ": input is not a valid density matrix (trace error " + std::to_string(tr) + ")");
}

/// rho -> sum_i rho_ii |i><i|
inline HermitianMatrix measure_dephase(const HermitianMatrix& rho) {
  check_intervention_input(rho, "measure_dephase");
  HermitianMatrix out(rho.dim());
  for (Index i = 0; i < rho.dim(); ++i) out.set(i, i, rho(i, i));
  return out;
}

/// Zeroes only the coherences in row/column `s`. Used to compare against
/// full dephasing for the continuum models.
inline HermitianMatrix dephase_level(const HermitianMatrix& rho, Index s) {
  check_intervention_input(rho, "dephase_level");
  if (s < 0 || s >= rho.dim()) throw ParameterError("dephase_level: index out of range");
  HermitianMatrix out = rho;
  for (Index k = 0; k < rho.dim(); ++k)
    if (k != s) out.set(s, k, 0.0);
  return out;
}

/// U rho U with U = 1 - 2|s><s|: negates the off-diagonal entries of row and column s.
inline HermitianMatrix sign_flip(const HermitianMatrix& rho, Index s) {
  check_intervention_input(rho, "sign_flip");
  if (s < 0 || s >= rho.dim())
    throw ParameterError("sign_flip: state index " + std::to_string(s) + " out of range for dim " + std::to_string(rho.dim()));
  HermitianMatrix out = rho;
  for (Index k = 0; k < rho.dim(); ++k)
    if (k != s) out.set(s, k, -rho(s, k));
  return out;
}

inline HermitianMatrix apply(const Intervention& iv, const HermitianMatrix& rho) {
  return iv.kind == InterventionKind::Measure ? measure_dephase(rho) : sign_flip(rho, iv.target);
}

}  // namespace qz
