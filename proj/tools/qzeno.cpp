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

#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qzeno/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qzeno: density-matrix dynamics under measurements and sign-flip unitaries"};
  app.require_subcommand(1);

  std::string config;
  std::string out;
  auto* simulate = app.add_subcommand("simulate", "Run one scenario and write its trajectory as CSV");
  simulate->add_option("--config", config, "Scenario config (JSON)")->required();
  simulate->add_option("--out", out, "Output CSV (defaults to output.path)");

  std::string trajectory;
  auto* predict = app.add_subcommand("predict", "Print the Sigma-minimum prediction for a model");
  predict->add_option("--config", config, "Model config (JSON)")->required();
  predict->add_option("--trajectory", trajectory, "Trajectory CSV with every population column");

  std::string figure;
  std::string out_dir;
  auto* reproduce = app.add_subcommand("reproduce", "Write the CSVs and gnuplot script for a canned figure");
  reproduce->add_option("--figure", figure, "fig1..fig10")->required();
  reproduce->add_option("--out-dir", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qz::cli::kParse;
  }

  const auto opt = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional<std::string>(s); };
  if (*simulate) return qz::cli::cmd_simulate(config, opt(out));
  if (*predict) return qz::cli::cmd_predict(config, opt(trajectory));
  return qz::cli::cmd_reproduce(figure, out_dir);
}
