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

// Subcommand bodies behind the qzeno executable. Each returns the process exit code.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qzeno/cli/config.hpp"
#include "qzeno/cli/csv.hpp"
#include "qzeno/cli/figures.hpp"

namespace qz::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kParse = 2, kValidation = 3, kUnknownFigure = 4 };

namespace detail {

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const ParameterError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const DegenerateSpectrumError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace detail

inline std::string trajectory_csv(const Trajectory& traj, Index dim) {
  std::ostringstream os;
  write_trajectory_csv(os, traj, dim);
  return os.str();
}

inline int cmd_simulate(const std::string& config_path, const std::optional<std::string>& out_path,
                        std::ostream& err = std::cerr) {
  return detail::guarded(err, [&] {
    const ConfigDocument doc = load_config(config_path);
    const std::optional<std::string> target = out_path ? out_path : doc.output_path;
    if (!target) throw ParseError("output.path: no output path given (use --out)");
    const Trajectory traj = run(doc.scenario);
    write_file(*target, trajectory_csv(traj, doc.scenario.model.dim()));
    return static_cast<int>(kOk);
  });
}

inline int cmd_predict(const std::string& config_path, const std::optional<std::string>& trajectory_path,
                       std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return detail::guarded(err, [&] {
    const ConfigDocument doc = load_config(config_path, /*model_only=*/true);
    const ModelSpec& m = doc.scenario.model;
    const RealVector e = level_energies(m);
    RealVector p0 = RealVector::Zero(e.size());
    p0[0] = 1.0;
    const SigmaMinimum init = sigma_min_predictor(channel_inputs(e, p0, m.v));
    out << "t_min " << format_number(init.t_min) << "\n";
    out << "sigma_min " << format_number(init.sigma_min) << "\n";
    if (!trajectory_path) return static_cast<int>(kOk);

    std::ifstream in(*trajectory_path);
    if (!in) throw ValidationError("cannot read trajectory '" + *trajectory_path + "'");
    const CsvTable table = read_csv(in);
    const int tcol = table.column("t");
    if (tcol < 0) throw ValidationError("trajectory: missing column 't'");
    std::vector<int> cols;
    for (Index j = 0; j < e.size(); ++j) {
      const int c = table.column("rho_" + pair_label(j, j, e.size()));
      if (c < 0) throw ValidationError("trajectory: missing population column for level " + std::to_string(j));
      cols.push_back(c);
    }
    CsvWriter w(out);
    w.row({"t", "t_min", "sigma_min"});
    for (const auto& row : table.rows) {
      RealVector p(e.size());
      for (Index j = 0; j < e.size(); ++j) p[j] = parse_number(row.at(cols[j]));
      const SigmaMinimum s = sigma_min_predictor(channel_inputs(e, p, m.v));
      w.row({row.at(tcol), format_number(s.t_min), format_number(s.sigma_min)});
    }
    return static_cast<int>(kOk);
  });
}

/// Writes one CSV per curve and `<id>.gp` into `out_dir`.
inline int cmd_reproduce(const std::string& figure_id, const std::string& out_dir, std::ostream& err = std::cerr) {
  const std::optional<Figure> fig = find_figure(figure_id);
  if (!fig) {
    err << "unknown figure '" << figure_id << "' (expected fig1..fig10)\n";
    return kUnknownFigure;
  }
  return detail::guarded(err, [&] {
    std::filesystem::create_directories(out_dir);
    const auto path = [&](const std::string& name) { return (std::filesystem::path(out_dir) / name).string(); };

    std::vector<ScenarioSpec> specs;
    for (const Curve& c : fig->curves)
      if (c.kind != CurveKind::Perturbative) specs.push_back(c.spec);
    const std::vector<Trajectory> runs = run_batch(specs);

    std::size_t next = 0;
    for (const Curve& c : fig->curves) {
      const Model model = build_model(c.spec.model);
      std::ostringstream os;
      CsvWriter w(os);
      if (c.kind == CurveKind::Perturbative) {
        w.row({"t", "rho_" + pair_label(0, 0, model.dim())});
        for (double t : sample_grid(c.spec.t_final, c.spec.sample_dt))
          w.row({format_number(t), format_number(rho00_perturbative(model, t))});
      } else if (c.kind == CurveKind::Predictor) {
        w.row({"t", "t_min", "sigma_min"});
        for (const auto& s : predictor_along(runs[next++], model))
          w.row({format_number(s.t), format_number(s.minimum.t_min), format_number(s.minimum.sigma_min)});
      } else {
        write_trajectory_csv(os, runs[next++], model.dim());
      }
      write_file(path(curve_file(*fig, c)), os.str());
    }
    write_file(path(fig->id + ".gp"), gnuplot_script(*fig));
    return static_cast<int>(kOk);
  });
}

}  // namespace qz::cli
