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

#pragma once

#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "discordium/json_io.hpp"

namespace discordium::cli {

// Exit codes: 0 success, 2 input or validation failure (error JSON on the
// error stream), 3 optimizer non-convergence (outputs still written, with a
// warning field).
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNoConvergence = 3;

struct GlobalOptions {
  uint64_t seed = 1;
  double kt = 1.0;
  int starts = 32;
  double tol = 1e-9;
  std::string out;

  OptimizerConfig optimizer() const {
    OptimizerConfig config;
    config.seed = seed;
    config.n_starts = starts;
    config.tol = tol;
    return config;
  }
};

namespace detail {

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

inline void write_text_file(const std::string& path,
                            const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
  if (!out) throw ParseError("failed writing '" + path + "'");
}

inline void write_json_file(const std::string& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

// Fixed numeric rendering so identical runs produce identical bytes.
inline std::string format_number(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

inline int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const Error& e) {
    err << json{{"schema", kSchemaTag},
                {"error", {{"code", e.code()}, {"message", e.what()}}}}
               .dump()
        << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << json{{"schema", kSchemaTag},
                {"error", {{"code", "Internal"}, {"message", e.what()}}}}
               .dump()
        << "\n";
    return kExitInputError;
  }
}

}  // namespace detail

struct AnalyzeOptions {
  GlobalOptions global;
  std::string state_file;
  std::string measured;  // empty: second layout part
};

inline int cmd_analyze(const AnalyzeOptions& options,
                       std::ostream& err = std::cerr) {
  return detail::guarded(
      [&]() {
        const DensityOperator rho =
            density_from_json(detail::read_json_file(options.state_file));
        if (rho.layout().size() != 2)
          throw NotBipartite("analyze needs a two-part state");
        const std::string measured = options.measured.empty()
                                         ? rho.layout().parts()[1].label
                                         : options.measured;
        const OptimizerConfig config = options.global.optimizer();
        const OptimizationResult best =
            least_discord(rho, measured, config);
        const OptimizationResult alt =
            least_discord_alt(rho, measured, config);
        const InfoReport report = discord_at_basis(rho, best.best_basis);
        const WorkLedger ledger =
            compute_ledger(rho, options.global.kt, config, measured);

        json doc{{"schema", kSchemaTag},
                 {"measured", measured},
                 {"report", report_to_json(report)},
                 {"optimization", optimization_to_json(best)},
                 {"optimization_alt", optimization_to_json(alt)},
                 {"ledger", ledger_to_json(ledger)}};
        const bool converged = best.converged && alt.converged;
        if (!converged) doc["warning"] = "no optimizer start converged";
        const std::string out =
            options.global.out.empty() ? "analyze.json" : options.global.out;
        detail::write_json_file(out, doc);
        return converged ? kExitOk : kExitNoConvergence;
      },
      err);
}

struct SweepOptions {
  GlobalOptions global;
  double z_min = 0.0;
  double z_max = 1.0;
  int steps = 101;
};

inline int cmd_sweep_werner(const SweepOptions& options,
                            std::ostream& err = std::cerr) {
  return detail::guarded(
      [&]() {
        if (options.steps < 2) throw BadRange("sweep needs at least 2 steps");
        if (!(0.0 <= options.z_min && options.z_min <= options.z_max &&
              options.z_max <= 1.0))
          throw BadRange("sweep range must satisfy 0 <= z_min <= z_max <= 1");
        const OptimizerConfig config = options.global.optimizer();

        // Grid points are independent; evaluate them across threads and
        // stitch rows back in z order so output bytes stay deterministic.
        std::vector<std::string> rows(options.steps);
        std::atomic<int> next{0};
        std::atomic<bool> all_converged{true};
        std::atomic<bool> failed{false};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto worker = [&]() {
          try {
            for (int i = next.fetch_add(1); i < options.steps;
                 i = next.fetch_add(1)) {
              const double z =
                  options.z_min + (options.z_max - options.z_min) * i /
                                      (options.steps - 1);
              const DensityOperator rho = werner(WernerSpec{z});
              const OptimizationResult best = least_discord(rho, "A", config);
              const OptimizationResult alt =
                  least_discord_alt(rho, "A", config);
              if (!best.converged || !alt.converged) all_converged = false;
              std::ostringstream row;
              row << detail::format_number(z) << ','
                  << detail::format_number(best.minimum) << ','
                  << detail::format_number(alt.minimum) << ','
                  << detail::format_number(deficit_lower_bound(rho)) << ','
                  << detail::format_number(von_neumann_entropy(rho)) << ','
                  << detail::format_number(mutual_information(rho, "S", "A"))
                  << '\n';
              rows[i] = row.str();
            }
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!failed.exchange(true)) first_error = std::current_exception();
          }
        };
        const unsigned hardware = std::thread::hardware_concurrency();
        const unsigned n_threads = std::max(
            1u, std::min<unsigned>(hardware == 0 ? 1 : hardware,
                                   static_cast<unsigned>(options.steps)));
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
        worker();
        for (std::thread& t : pool) t.join();
        if (failed) std::rethrow_exception(first_error);

        std::string csv =
            "z,least_discord,least_discord_alt,deficit_lower_bound,"
            "h_joint,mutual_i\n";
        for (const std::string& row : rows) csv += row;
        const std::string out =
            options.global.out.empty() ? "sweep.csv" : options.global.out;
        detail::write_text_file(out, csv);
        return all_converged ? kExitOk : kExitNoConvergence;
      },
      err);
}

struct DemonOptions {
  GlobalOptions global;
  double alpha_re = 1.0;
  double alpha_im = 0.0;
  double beta_re = 0.0;
  double beta_im = 0.0;
  bool decohere = false;
  bool classical = false;  // drive the decohered-correlation input instead
};

inline int cmd_demon(const DemonOptions& options,
                     std::ostream& err = std::cerr) {
  return detail::guarded(
      [&]() {
        const OptimizerConfig config = options.global.optimizer();
        const std::string out =
            options.global.out.empty() ? "demon.json" : options.global.out;
        if (options.classical) {
          const ClassicalCycleOutcome outcome = run_classical_input_cycle(
              options.decohere, options.global.kt, config);
          detail::write_json_file(out, classical_cycle_to_json(outcome));
        } else {
          const CycleOutcome outcome = run_demon_cycle(
              cplx(options.alpha_re, options.alpha_im),
              cplx(options.beta_re, options.beta_im), options.decohere,
              options.global.kt, config);
          detail::write_json_file(out, cycle_to_json(outcome));
        }
        return kExitOk;
      },
      err);
}

struct LoccOptions {
  GlobalOptions global;
  std::string preset;     // e.g. "staircase-2"; empty when spec_file is set
  std::string spec_file;  // nested-spec JSON
  std::vector<std::string> order;  // empty: follow the nesting chain
  std::string strategy = "greedy";
  std::vector<std::string> basis_files;  // for --strategy fixed, one per round
};

inline NestedSpec parse_staircase_preset(const std::string& preset) {
  const std::string prefix = "staircase-";
  if (preset.rfind(prefix, 0) != 0 || preset.size() != prefix.size() + 1)
    throw BadParameter("unknown preset '" + preset + "'");
  return staircase(preset.back() - '0');
}

inline int cmd_locc(const LoccOptions& options, std::ostream& err = std::cerr,
                    std::ostream& table = std::cout) {
  return detail::guarded(
      [&]() {
        if (options.preset.empty() == options.spec_file.empty())
          throw BadParameter("need exactly one of --preset and --spec");
        const NestedSpec spec =
            options.preset.empty()
                ? nested_from_json(detail::read_json_file(options.spec_file))
                : parse_staircase_preset(options.preset);
        const DensityOperator rho = nested(spec);
        const std::vector<std::string> order =
            options.order.empty() ? nested_sides(spec) : options.order;

        Strategy strategy = Strategy::greedy;
        std::vector<MeasurementBasis> fixed;
        if (options.strategy == "fixed") {
          strategy = Strategy::fixed;
          for (const auto& path : options.basis_files)
            fixed.push_back(basis_from_json(detail::read_json_file(path)));
        } else if (options.strategy != "greedy") {
          throw BadParameter("strategy must be greedy or fixed");
        }

        const OptimizerConfig config = options.global.optimizer();
        const ProtocolTrace trace = run_protocol(rho, order, strategy, fixed,
                                                 config, options.global.kt);
        json doc = trace_to_json(trace);
        if (strategy == Strategy::greedy)
          doc["rounds_to_exhaust"] = rounds_to_exhaust(spec, config);

        table << "round side accessible_entropy work\n";
        for (size_t r = 0; r < trace.rounds.size(); ++r) {
          char line[96];
          std::snprintf(line, sizeof(line), "%5d %4s %18.6f %8.6f\n",
                        trace.rounds[r].round_index,
                        trace.rounds[r].side.c_str(),
                        trace.accessible_entropy_by_round[r],
                        trace.work_by_round[r]);
          table << line;
        }
        const std::string out =
            options.global.out.empty() ? "locc.json" : options.global.out;
        detail::write_json_file(out, doc);
        return kExitOk;
      },
      err);
}

struct GenOptions {
  GlobalOptions global;
  std::string family;  // bell | classical-mixture | werner | random |
                       // nested | nested-spec
  std::string label_s = "S";
  std::string label_a = "A";
  double z = 0.0;
  std::string preset;
  std::string spec_file;
  std::vector<int> dims = {2, 2};
};

inline int cmd_gen(const GenOptions& options, std::ostream& err = std::cerr) {
  return detail::guarded(
      [&]() {
        const std::string out =
            options.global.out.empty() ? "state.json" : options.global.out;
        auto spec_of = [&]() {
          if (options.preset.empty() == options.spec_file.empty())
            throw BadParameter("need exactly one of --preset and --spec");
          return options.preset.empty()
                     ? nested_from_json(
                           detail::read_json_file(options.spec_file))
                     : parse_staircase_preset(options.preset);
        };
        if (options.family == "bell") {
          detail::write_json_file(
              out, density_to_json(bell(options.label_s, options.label_a)));
        } else if (options.family == "classical-mixture") {
          detail::write_json_file(
              out, density_to_json(
                       classical_mixture(options.label_s, options.label_a)));
        } else if (options.family == "werner") {
          detail::write_json_file(
              out, density_to_json(werner(WernerSpec{options.z},
                                          options.label_s, options.label_a)));
        } else if (options.family == "random") {
          detail::write_json_file(
              out, density_to_json(
                       random_density(options.dims, options.global.seed)));
        } else if (options.family == "nested") {
          detail::write_json_file(out, density_to_json(nested(spec_of())));
        } else if (options.family == "nested-spec") {
          detail::write_json_file(out, nested_to_json(spec_of()));
        } else {
          throw BadParameter("unknown family '" + options.family + "'");
        }
        return kExitOk;
      },
      err);
}

}  // namespace discordium::cli
