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

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "discordium/cli.hpp"
#include "discordium/json_io.hpp"
#include "discordium/states.hpp"

using discordium::DensityOperator;
using discordium::json;
namespace cli = discordium::cli;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

json parse_file(const std::string& path) { return json::parse(slurp(path)); }

int run_binary(const std::string& args) {
  const std::string cmd = std::string(DISCORDIUM_CLI_PATH) + " " + args;
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("density documents round-trip exactly") {
  DensityOperator rho = discordium::random_density({2, 3}, 321);
  json doc = discordium::density_to_json(rho);
  DensityOperator back = discordium::density_from_json(doc);
  REQUIRE(back.layout() == rho.layout());
  REQUIRE(discordium::max_abs_diff(back.matrix(), rho.matrix()) == 0.0);

  // Serialized text re-parses to the same document.
  json reparsed = json::parse(doc.dump(2));
  DensityOperator again = discordium::density_from_json(reparsed);
  REQUIRE(discordium::max_abs_diff(again.matrix(), rho.matrix()) == 0.0);
}

TEST_CASE("density parsing rejects bad documents") {
  DensityOperator rho = discordium::bell("S", "A");
  json doc = discordium::density_to_json(rho);

  json wrong_schema = doc;
  wrong_schema["schema"] = "discordium/999";
  REQUIRE_THROWS_AS(discordium::density_from_json(wrong_schema),
                    discordium::ParseError);

  json missing = doc;
  missing.erase("re");
  REQUIRE_THROWS_AS(discordium::density_from_json(missing),
                    discordium::ParseError);

  // Admissibility violations surface as validation errors.
  json skewed = doc;
  skewed["re"][0][1] = 0.9;
  REQUIRE_THROWS_AS(discordium::density_from_json(skewed),
                    discordium::NotHermitian);

  json heavy = doc;
  heavy["re"][0][0] = 0.9;
  REQUIRE_THROWS_AS(discordium::density_from_json(heavy),
                    discordium::NotUnitTrace);
}

TEST_CASE("basis documents round-trip and validate") {
  discordium::MeasurementBasis basis = discordium::random_basis(3, 12, "B");
  json doc = discordium::basis_to_json(basis);
  discordium::MeasurementBasis back = discordium::basis_from_json(doc);
  REQUIRE(back.target == "B");
  REQUIRE(discordium::max_abs_diff(back.vectors, basis.vectors) == 0.0);

  json crooked = doc;
  crooked["re"][0][0] = 0.5;
  REQUIRE_THROWS_AS(discordium::basis_from_json(crooked),
                    discordium::NotOrthonormal);
}

TEST_CASE("nested documents round-trip through JSON") {
  discordium::NestedSpec spec = discordium::staircase(2);
  json doc = discordium::nested_to_json(spec);
  discordium::NestedSpec back = discordium::nested_from_json(doc);
  REQUIRE(discordium::max_abs_diff(discordium::nested(back).matrix(),
                                   discordium::nested(spec).matrix()) == 0.0);

  json branch_conflict = doc;
  branch_conflict["branches"][0].erase("child");
  REQUIRE_THROWS_AS(discordium::nested_from_json(branch_conflict),
                    discordium::ParseError);

  // Integer shorthand for branch kets.
  json brief{{"schema", discordium::kSchemaTag},
             {"side", "A"},
             {"dim", 2},
             {"branches",
              json::array(
                  {json{{"probability", 0.5},
                        {"state", 0},
                        {"leaf", discordium::density_to_json(
                                     discordium::classical_mixture("S", "B"))}},
                   json{{"probability", 0.5},
                        {"state", 1},
                        {"leaf", discordium::density_to_json(
                                     discordium::classical_mixture("S", "B"))}}})}};
  discordium::NestedSpec parsed = discordium::nested_from_json(brief);
  REQUIRE(parsed.branches.size() == 2);
  REQUIRE(discordium::nested(parsed).layout().size() == 3);
}

TEST_CASE("generate and analyze a maximally entangled pair") {
  cli::GenOptions gen;
  gen.family = "bell";
  gen.global.out = "tmp_bell.json";
  REQUIRE(cli::cmd_gen(gen) == cli::kExitOk);

  cli::AnalyzeOptions analyze;
  analyze.state_file = "tmp_bell.json";
  analyze.global.out = "tmp_bell_analysis.json";
  std::ostringstream err;
  REQUIRE(cli::cmd_analyze(analyze, err) == cli::kExitOk);
  REQUIRE(err.str().empty());

  json doc = parse_file("tmp_bell_analysis.json");
  REQUIRE(doc.at("schema") == discordium::kSchemaTag);
  REQUIRE(doc.at("measured") == "A");
  REQUIRE(doc.at("report").at("discord").get<double>() ==
          Catch::Approx(1.0).margin(1e-8));
  REQUIRE(doc.at("optimization").at("minimum").get<double>() ==
          Catch::Approx(1.0).margin(1e-8));
  REQUIRE(doc.at("optimization").at("converged").get<bool>());
  REQUIRE(doc.at("ledger").at("advantage").get<double>() ==
          Catch::Approx(1.0).margin(1e-8));
  REQUIRE(doc.at("ledger").at("w_quantum").get<double>() ==
          Catch::Approx(2.0).margin(1e-8));
}

TEST_CASE("analyze finds the aligned frame of the correlated mixture") {
  cli::GenOptions gen;
  gen.family = "classical-mixture";
  gen.global.out = "tmp_cc.json";
  REQUIRE(cli::cmd_gen(gen) == cli::kExitOk);

  cli::AnalyzeOptions analyze;
  analyze.state_file = "tmp_cc.json";
  analyze.global.out = "tmp_cc_analysis.json";
  REQUIRE(cli::cmd_analyze(analyze) == cli::kExitOk);

  json doc = parse_file("tmp_cc_analysis.json");
  REQUIRE(doc.at("optimization").at("minimum").get<double>() <= 1e-6);
  discordium::MeasurementBasis used = discordium::basis_from_json(
      doc.at("ledger").at("basis_used"));
  REQUIRE(discordium::same_projectors(
      used, discordium::computational_basis("A", 2), 1e-3));
  // The split variant can never exceed the joint one.
  REQUIRE(doc.at("optimization_alt").at("minimum").get<double>() <=
          doc.at("optimization").at("minimum").get<double>() + 1e-8);
}

TEST_CASE("repeated runs produce identical bytes") {
  cli::GenOptions gen;
  gen.family = "random";
  gen.dims = {2, 2};
  gen.global.seed = 5;
  gen.global.out = "tmp_rand_a.json";
  REQUIRE(cli::cmd_gen(gen) == cli::kExitOk);
  gen.global.out = "tmp_rand_b.json";
  REQUIRE(cli::cmd_gen(gen) == cli::kExitOk);
  REQUIRE(slurp("tmp_rand_a.json") == slurp("tmp_rand_b.json"));

  cli::AnalyzeOptions analyze;
  analyze.state_file = "tmp_rand_a.json";
  analyze.global.out = "tmp_rand_analysis_a.json";
  REQUIRE(cli::cmd_analyze(analyze) == cli::kExitOk);
  analyze.global.out = "tmp_rand_analysis_b.json";
  REQUIRE(cli::cmd_analyze(analyze) == cli::kExitOk);
  REQUIRE(slurp("tmp_rand_analysis_a.json") ==
          slurp("tmp_rand_analysis_b.json"));

  cli::SweepOptions sweep;
  sweep.steps = 3;
  sweep.global.out = "tmp_sweep_a.csv";
  REQUIRE(cli::cmd_sweep_werner(sweep) == cli::kExitOk);
  sweep.global.out = "tmp_sweep_b.csv";
  REQUIRE(cli::cmd_sweep_werner(sweep) == cli::kExitOk);
  REQUIRE(slurp("tmp_sweep_a.csv") == slurp("tmp_sweep_b.csv"));
}

TEST_CASE("sweep output shape and endpoint rows") {
  cli::SweepOptions sweep;
  sweep.steps = 3;
  sweep.global.out = "tmp_sweep.csv";
  REQUIRE(cli::cmd_sweep_werner(sweep) == cli::kExitOk);

  std::istringstream csv(slurp("tmp_sweep.csv"));
  std::string line;
  REQUIRE(std::getline(csv, line));
  REQUIRE(line ==
          "z,least_discord,least_discord_alt,deficit_lower_bound,h_joint,"
          "mutual_i");

  std::vector<std::vector<double>> rows;
  while (std::getline(csv, line)) {
    std::vector<double> row;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) row.push_back(std::stod(field));
    REQUIRE(row.size() == 6);
    rows.push_back(row);
  }
  REQUIRE(rows.size() == 3);
  REQUIRE(rows[0][0] == 0.0);
  REQUIRE(rows[2][0] == 1.0);
  // Uncorrelated end: no discord; entangled end: a full bit.
  REQUIRE(rows[0][1] == Catch::Approx(0.0).margin(1e-6));
  REQUIRE(rows[2][1] == Catch::Approx(1.0).margin(1e-6));
  REQUIRE(rows[2][3] == Catch::Approx(1.0).margin(1e-9));
  REQUIRE(rows[2][5] == Catch::Approx(2.0).margin(1e-9));
}

TEST_CASE("demon command reports both cycle flavors") {
  cli::DemonOptions demon;
  demon.alpha_re = std::sqrt(0.5);
  demon.beta_re = std::sqrt(0.5);
  demon.global.out = "tmp_demon.json";
  REQUIRE(cli::cmd_demon(demon) == cli::kExitOk);
  json coherent = parse_file("tmp_demon.json");
  REQUIRE(coherent.at("harvested_work").get<double>() ==
          Catch::Approx(2.0).margin(1e-9));
  REQUIRE(coherent.at("h_a").get<double>() == Catch::Approx(0.0).margin(1e-9));

  demon.decohere = true;
  demon.global.out = "tmp_demon_leaky.json";
  REQUIRE(cli::cmd_demon(demon) == cli::kExitOk);
  json leaky = parse_file("tmp_demon_leaky.json");
  REQUIRE(leaky.at("harvested_work").get<double>() ==
          Catch::Approx(1.0).margin(1e-9));
  REQUIRE(leaky.at("h_a").get<double>() == Catch::Approx(1.0).margin(1e-9));

  demon.classical = true;
  demon.global.out = "tmp_demon_classical.json";
  REQUIRE(cli::cmd_demon(demon) == cli::kExitOk);
  json classical = parse_file("tmp_demon_classical.json");
  REQUIRE(classical.at("branch_finals").size() == 2);
  REQUIRE(classical.at("harvested_work").get<double>() ==
          Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("protocol command emits the trace and a text table") {
  cli::LoccOptions locc;
  locc.preset = "staircase-2";
  locc.global.out = "tmp_locc.json";
  std::ostringstream err, table;
  REQUIRE(cli::cmd_locc(locc, err, table) == cli::kExitOk);
  REQUIRE(err.str().empty());
  REQUIRE(table.str().rfind("round side accessible_entropy work\n", 0) == 0);

  json doc = parse_file("tmp_locc.json");
  REQUIRE(doc.at("rounds_to_exhaust").get<int>() == 2);
  REQUIRE(doc.at("accessible_entropy_by_round").size() == 2);
  REQUIRE(doc.at("accessible_entropy_by_round")[0].get<double>() ==
          Catch::Approx(3.0).margin(1e-6));
  REQUIRE(doc.at("accessible_entropy_by_round")[1].get<double>() ==
          Catch::Approx(2.0).margin(1e-6));
  REQUIRE(doc.at("exchanges").get<int>() == 1);

  // Fixed strategy with explicit basis files.
  spit("tmp_basis_a.json",
       discordium::basis_to_json(discordium::computational_basis("A", 2))
           .dump());
  spit("tmp_basis_b.json",
       discordium::basis_to_json(discordium::computational_basis("B", 2))
           .dump());
  locc.strategy = "fixed";
  locc.basis_files = {"tmp_basis_a.json", "tmp_basis_b.json"};
  locc.global.out = "tmp_locc_fixed.json";
  std::ostringstream err2, table2;
  REQUIRE(cli::cmd_locc(locc, err2, table2) == cli::kExitOk);
  json rigid = parse_file("tmp_locc_fixed.json");
  REQUIRE_FALSE(rigid.contains("rounds_to_exhaust"));
  REQUIRE(rigid.at("accessible_entropy_by_round")[1].get<double>() >
          doc.at("accessible_entropy_by_round")[1].get<double>() + 0.4);
}

TEST_CASE("failures exit with code 2 and an error document") {
  std::ostringstream err;
  cli::AnalyzeOptions missing;
  missing.state_file = "tmp_never_written.json";
  REQUIRE(cli::cmd_analyze(missing, err) == cli::kExitInputError);
  json report = json::parse(err.str());
  REQUIRE(report.at("error").at("code") == "ParseError");

  std::ostringstream err2;
  cli::SweepOptions sweep;
  sweep.z_min = 0.8;
  sweep.z_max = 0.2;
  REQUIRE(cli::cmd_sweep_werner(sweep, err2) == cli::kExitInputError);
  REQUIRE(json::parse(err2.str()).at("error").at("code") == "BadRange");

  std::ostringstream err3;
  cli::GenOptions gen;
  gen.family = "zoo";
  REQUIRE(cli::cmd_gen(gen, err3) == cli::kExitInputError);
  REQUIRE(json::parse(err3.str()).at("error").at("code") == "BadParameter");

  std::ostringstream err4;
  cli::LoccOptions locc;
  locc.preset = "staircase-9";
  REQUIRE(cli::cmd_locc(locc, err4) == cli::kExitInputError);
  REQUIRE(json::parse(err4.str()).at("error").at("code") == "BadRange");

  std::ostringstream err5;
  cli::DemonOptions demon;
  demon.alpha_re = 1.0;
  demon.beta_re = 1.0;
  REQUIRE(cli::cmd_demon(demon, err5) == cli::kExitInputError);
  REQUIRE(json::parse(err5.str()).at("error").at("code") == "NotNormalized");

  // A malformed state file also lands on code 2.
  spit("tmp_broken.json", "{ not json");
  std::ostringstream err6;
  cli::AnalyzeOptions broken;
  broken.state_file = "tmp_broken.json";
  REQUIRE(cli::cmd_analyze(broken, err6) == cli::kExitInputError);
  REQUIRE(json::parse(err6.str()).at("error").at("code") == "ParseError");
}

TEST_CASE("installed binary wires the same commands") {
  REQUIRE(run_binary("gen bell --out tmp_bin_state.json") == 0);
  REQUIRE(run_binary(
              "analyze tmp_bin_state.json --out tmp_bin_analysis.json") == 0);
  json doc = parse_file("tmp_bin_analysis.json");
  REQUIRE(doc.at("optimization").at("minimum").get<double>() ==
          Catch::Approx(1.0).margin(1e-8));

  REQUIRE(run_binary("sweep-werner --steps 3 --out tmp_bin_sweep.csv 2>/dev/null") ==
          0);
  REQUIRE(slurp("tmp_bin_sweep.csv") == slurp("tmp_sweep_a.csv"));

  // Unknown input file: exit code 2.
  REQUIRE(run_binary("analyze tmp_bin_missing.json 2>/dev/null") == 2);
}
