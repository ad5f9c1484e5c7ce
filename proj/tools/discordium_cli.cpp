// Copyright 2026 The Discordium Authors
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

#include <string>
#include <vector>

#include <CLI11.hpp>

#include "discordium/cli.hpp"

namespace dcli = discordium::cli;

namespace {

void add_global_flags(CLI::App* app, dcli::GlobalOptions* global) {
  app->add_option("--seed", global->seed, "Random seed");
  app->add_option("--kt", global->kt, "Energy unit kT")
      ->check(CLI::PositiveNumber);
  app->add_option("--starts", global->starts, "Optimizer restarts")
      ->check(CLI::PositiveNumber);
  app->add_option("--tol", global->tol, "Optimizer convergence tolerance")
      ->check(CLI::PositiveNumber);
  app->add_option("--out", global->out, "Output file path");
}

std::vector<std::string> split_labels(const std::string& csv) {
  std::vector<std::string> out;
  std::string current;
  for (char c : csv) {
    if (c == ',') {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation thermodynamics toolkit"};
  app.require_subcommand(1);

  dcli::AnalyzeOptions analyze;
  CLI::App* cmd_analyze =
      app.add_subcommand("analyze", "Entropy, discord and work report");
  add_global_flags(cmd_analyze, &analyze.global);
  cmd_analyze->add_option("state", analyze.state_file, "State JSON file")
      ->required();
  cmd_analyze->add_option("--measured", analyze.measured,
                          "Measured subsystem label");

  dcli::SweepOptions sweep;
  CLI::App* cmd_sweep = app.add_subcommand(
      "sweep-werner", "Sweep the isotropic mixing parameter, CSV output");
  add_global_flags(cmd_sweep, &sweep.global);
  cmd_sweep->add_option("--z-min", sweep.z_min, "Lower end of the sweep");
  cmd_sweep->add_option("--z-max", sweep.z_max, "Upper end of the sweep");
  cmd_sweep->add_option("--steps", sweep.steps, "Grid points");

  dcli::DemonOptions demon;
  CLI::App* cmd_demon =
      app.add_subcommand("demon", "Run the three-gate memory demon cycle");
  add_global_flags(cmd_demon, &demon.global);
  cmd_demon->add_option("--alpha", demon.alpha_re, "Re alpha");
  cmd_demon->add_option("--alpha-im", demon.alpha_im, "Im alpha");
  cmd_demon->add_option("--beta", demon.beta_re, "Re beta");
  cmd_demon->add_option("--beta-im", demon.beta_im, "Im beta");
  cmd_demon->add_flag("--decohere", demon.decohere,
                      "Leak the memory record into the environment");
  cmd_demon->add_flag("--classical", demon.classical,
                      "Drive the decohered-correlation input instead");

  dcli::LoccOptions locc;
  std::string order_csv;
  CLI::App* cmd_locc = app.add_subcommand(
      "locc", "Multi-round conditional measurement protocol");
  add_global_flags(cmd_locc, &locc.global);
  cmd_locc->add_option("--preset", locc.preset,
                       "Built-in nested family, e.g. staircase-2");
  cmd_locc->add_option("--spec", locc.spec_file, "Nested-spec JSON file");
  cmd_locc->add_option("--order", order_csv,
                       "Comma-separated measured sides, e.g. A,B");
  cmd_locc->add_option("--strategy", locc.strategy, "greedy or fixed");
  cmd_locc->add_option("--basis-file", locc.basis_files,
                       "Fixed-strategy basis JSON, one per round");

  dcli::GenOptions gen;
  std::string labels_csv, dims_csv;
  CLI::App* cmd_gen =
      app.add_subcommand("gen", "Write a canonical state to a file");
  add_global_flags(cmd_gen, &gen.global);
  cmd_gen
      ->add_option("family", gen.family,
                   "bell | classical-mixture | werner | random | nested | "
                   "nested-spec")
      ->required();
  cmd_gen->add_option("--labels", labels_csv, "Two labels, e.g. S,A");
  cmd_gen->add_option("--z", gen.z, "Mixing parameter for werner");
  cmd_gen->add_option("--preset", gen.preset, "Nested preset name");
  cmd_gen->add_option("--spec", gen.spec_file, "Nested-spec JSON file");
  cmd_gen->add_option("--dims", dims_csv,
                      "Comma-separated dimensions for random, e.g. 2,2");

  CLI11_PARSE(app, argc, argv);

  if (cmd_analyze->parsed()) return dcli::cmd_analyze(analyze);
  if (cmd_sweep->parsed()) return dcli::cmd_sweep_werner(sweep);
  if (cmd_demon->parsed()) return dcli::cmd_demon(demon);
  if (cmd_locc->parsed()) {
    if (!order_csv.empty()) locc.order = split_labels(order_csv);
    return dcli::cmd_locc(locc);
  }
  if (cmd_gen->parsed()) {
    if (!labels_csv.empty()) {
      const auto labels = split_labels(labels_csv);
      if (labels.size() != 2) {
        std::cerr << "{\"schema\":\"discordium/1\",\"error\":{\"code\":"
                     "\"BadParameter\",\"message\":\"--labels needs exactly "
                     "two labels\"}}\n";
        return dcli::kExitInputError;
      }
      gen.label_s = labels[0];
      gen.label_a = labels[1];
    }
    if (!dims_csv.empty()) {
      gen.dims.clear();
      for (const auto& d : split_labels(dims_csv))
        gen.dims.push_back(std::stoi(d));
    }
    return dcli::cmd_gen(gen);
  }
  return dcli::kExitInputError;
}
