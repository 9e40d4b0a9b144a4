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

// Canned scenarios for the figure set, plus the gnuplot script that plots them.

#include <optional>
#include <string>
#include <vector>

#include "qzeno/cli/csv.hpp"
#include "qzeno/scenario.hpp"

namespace qz::cli {

enum class CurveKind { Exact, Perturbative, Predictor };

struct Curve {
  std::string name;   // file stem suffix
  std::string title;  // legend
  CurveKind kind = CurveKind::Exact;
  ScenarioSpec spec;
};

struct Figure {
  std::string id;
  std::string description;
  std::vector<std::string> panels;  // y columns, one panel each
  std::vector<Curve> curves;
};

namespace detail {

inline std::string short_number(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline ScenarioSpec base(const ModelSpec& m, double t_final, double dt, std::vector<IndexPair> pairs = {},
                         std::vector<Index> pops = {0}) {
  ScenarioSpec s;
  s.model = m;
  s.t_final = t_final;
  s.sample_dt = dt;
  s.coherence_pairs = std::move(pairs);
  s.populations = std::move(pops);
  return s;
}

inline std::vector<Curve> family(const ScenarioSpec& ref, const std::vector<double>& times, InterventionKind kind) {
  std::vector<Curve> out{{"exact", "exact", CurveKind::Exact, ref}};
  const std::string verb = kind == InterventionKind::Measure ? "measure" : "flip";
  for (double t : times) {
    ScenarioSpec s = ref;
    s.schedule = InterventionSchedule::at({t}, kind, 0);
    out.push_back({verb + "_" + short_number(t), verb + " at " + short_number(t), CurveKind::Exact, s});
  }
  return out;
}

inline Curve predictor_curve(const ModelSpec& m, double t_final) {
  return {"predictor", "Sigma_min predictor", CurveKind::Predictor, base(m, t_final, 1.0, {}, {})};
}

}  // namespace detail

inline std::vector<Figure> figure_catalog() {
  using detail::base;
  using detail::family;
  const ModelSpec two = ModelSpec::two_level();
  const ModelSpec lic = ModelSpec::level_in_continuum();
  const ModelSpec loc = ModelSpec::level_outside_continuum();
  const auto M = InterventionKind::Measure;
  const auto U = InterventionKind::SignFlip;
  std::vector<Figure> figs;

  {
    Figure f{"fig1", "two-level: exact, second-order perturbative, measurement at 1", {"rho_00"}, {}};
    const ScenarioSpec ref = base(two, 6.0, 0.01, {{1, 0}}, {0, 1});
    f.curves = family(ref, {1.0}, M);
    f.curves.insert(f.curves.begin() + 1, Curve{"perturbative", "perturbation theory", CurveKind::Perturbative, ref});
    figs.push_back(f);
  }
  figs.push_back({"fig2", "two-level: coherence rho_10 along the exact dynamics", {"re_10", "im_10"},
                  {{"exact", "exact", CurveKind::Exact, base(two, 12.0, 0.01, {{1, 0}}, {0, 1})}}});
  figs.push_back({"fig3", "two-level: measurements at 5.5, 7.5, 8.5", {"rho_00", "im_10"},
                  family(base(two, 12.0, 0.01, {{1, 0}}, {0, 1}), {5.5, 7.5, 8.5}, M)});
  figs.push_back({"fig4", "two-level: sign flips at 2.5, 5.5, 7.5, 8.5", {"rho_00", "im_10"},
                  family(base(two, 12.0, 0.01, {{1, 0}}, {0, 1}), {2.5, 5.5, 7.5, 8.5}, U)});
  figs.push_back({"fig5", "level in continuum: measurements at 10, 30, 55, 80", {"rho_0_0", "sigma"},
                  family(base(lic, 120.0, 0.05), {10, 30, 55, 80}, M)});
  {
    Figure f{"fig6", "level in continuum: Sigma after measurements, with the Sigma_min predictor", {"sigma"},
             family(base(lic, 120.0, 0.02), {10, 30, 55, 80}, M)};
    f.curves.push_back(detail::predictor_curve(lic, 120.0));
    figs.push_back(f);
  }
  figs.push_back({"fig7", "level in continuum: sign flips at 10, 30, 55, 80", {"rho_0_0", "sigma"},
                  family(base(lic, 120.0, 0.05), {10, 30, 55, 80}, U)});
  figs.push_back({"fig8", "level outside continuum: measurements at 30, 55, 80", {"rho_0_0", "sigma"},
                  family(base(loc, 120.0, 0.05), {30, 55, 80}, M)});
  figs.push_back({"fig9", "level outside continuum: sign flips at 30, 55, 80", {"rho_0_0", "sigma"},
                  family(base(loc, 120.0, 0.05), {30, 55, 80}, U)});
  {
    Figure f{"fig10", "level outside continuum: Sigma after measurements, with the Sigma_min predictor", {"sigma"},
             family(base(loc, 120.0, 0.02), {30, 55, 80}, M)};
    f.curves.push_back(detail::predictor_curve(loc, 120.0));
    figs.push_back(f);
  }
  return figs;
}

inline std::optional<Figure> find_figure(const std::string& id) {
  for (auto& f : figure_catalog())
    if (f.id == id) return f;
  return std::nullopt;
}

inline std::string curve_file(const Figure& f, const Curve& c) { return f.id + "_" + c.name + ".csv"; }

inline std::string gnuplot_script(const Figure& f) {
  std::ostringstream gp;
  gp << "# " << f.description << "\n";
  gp << "set datafile separator ','\n";
  gp << "set terminal pngcairo size 900," << 380 * f.panels.size() << "\n";
  gp << "set output '" << f.id << ".png'\n";
  gp << "set xlabel 't (a.u.)'\n";
  if (f.panels.size() > 1) gp << "set multiplot layout " << f.panels.size() << ",1\n";
  for (const std::string& col : f.panels) {
    gp << "set ylabel '" << col << "'\n";
    gp << "plot ";
    bool first = true;
    for (const Curve& c : f.curves) {
      std::string y = col;
      if (c.kind == CurveKind::Perturbative && col != "rho_00") continue;
      if (c.kind == CurveKind::Predictor) y = "sigma_min";
      if (!first) gp << ", \\\n     ";
      first = false;
      gp << "'" << curve_file(f, c) << "' using \"t\":\"" << y << "\" with lines";
      if (c.kind == CurveKind::Predictor) gp << " dashtype 3 lc rgb 'black'";
      gp << " title '" << c.title << "'";
    }
    gp << "\n";
  }
  if (f.panels.size() > 1) gp << "unset multiplot\n";
  return gp.str();
}

}  // namespace qz::cli
