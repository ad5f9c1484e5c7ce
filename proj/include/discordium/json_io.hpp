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

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "discordium/circuit.hpp"
#include "discordium/demon.hpp"
#include "discordium/density.hpp"
#include "discordium/info.hpp"
#include "discordium/locc.hpp"
#include "discordium/optimize.hpp"
#include "discordium/states.hpp"

namespace discordium {

using json = nlohmann::json;

inline constexpr const char* kSchemaTag = "discordium/1";

namespace detail {

inline void check_schema(const json& j) {
  if (j.contains("schema") && j.at("schema") != kSchemaTag)
    throw ParseError("unsupported schema '" +
                     j.at("schema").get<std::string>() + "'");
}

inline json matrix_part(const ComplexMatrix& m, bool imaginary) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c)
      row.push_back(imaginary ? m(r, c).imag() : m(r, c).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ComplexMatrix matrix_from_parts(const json& re, const json& im) {
  if (!re.is_array() || !im.is_array() || re.size() != im.size())
    throw ParseError("re/im must be equally sized arrays of rows");
  const int rows = static_cast<int>(re.size());
  if (rows == 0) throw ParseError("empty matrix");
  const int cols = static_cast<int>(re.at(0).size());
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& re_row = re.at(r);
    const json& im_row = im.at(r);
    if (static_cast<int>(re_row.size()) != cols ||
        static_cast<int>(im_row.size()) != cols)
      throw ParseError("ragged matrix rows");
    for (int c = 0; c < cols; ++c)
      m(r, c) = cplx(re_row.at(c).get<double>(), im_row.at(c).get<double>());
  }
  return m;
}

}  // namespace detail

inline json layout_to_json(const SubsystemLayout& layout) {
  json parts = json::array();
  for (const auto& p : layout.parts()) parts.push_back({p.label, p.dim});
  return parts;
}

inline SubsystemLayout layout_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("layout must be an array of [label, dim]");
  std::vector<SubsystemLayout::Part> parts;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2)
      throw ParseError("layout entries must be [label, dim] pairs");
    parts.push_back({entry.at(0).get<std::string>(), entry.at(1).get<int>()});
  }
  return SubsystemLayout(std::move(parts));
}

inline json density_to_json(const DensityOperator& rho) {
  return json{{"schema", kSchemaTag},
              {"layout", layout_to_json(rho.layout())},
              {"re", detail::matrix_part(rho.matrix(), false)},
              {"im", detail::matrix_part(rho.matrix(), true)}};
}

// Parses and validates a density document; admissibility failures propagate
// as the corresponding validation errors.
inline DensityOperator density_from_json(const json& j) {
  detail::check_schema(j);
  if (!j.contains("layout") || !j.contains("re") || !j.contains("im"))
    throw ParseError("density document needs layout, re and im");
  return validate(detail::matrix_from_parts(j.at("re"), j.at("im")),
                  layout_from_json(j.at("layout")));
}

inline json basis_to_json(const MeasurementBasis& basis) {
  return json{{"schema", kSchemaTag},
              {"target", basis.target},
              {"re", detail::matrix_part(basis.vectors, false)},
              {"im", detail::matrix_part(basis.vectors, true)}};
}

inline MeasurementBasis basis_from_json(const json& j) {
  detail::check_schema(j);
  if (!j.contains("target") || !j.contains("re") || !j.contains("im"))
    throw ParseError("basis document needs target, re and im");
  return make_basis(j.at("target").get<std::string>(),
                    detail::matrix_from_parts(j.at("re"), j.at("im")));
}

inline json report_to_json(const InfoReport& r) {
  return json{{"h_s", r.h_s},
              {"h_a", r.h_a},
              {"h_joint", r.h_joint},
              {"mutual_i", r.mutual_i},
              {"j_asym", r.j_asym},
              {"h_cond", r.h_cond},
              {"accessible_joint", r.accessible_joint},
              {"discord", r.discord}};
}

inline json params_to_json(const BasisParams& p) {
  return json{{"target", p.target}, {"params", p.params}};
}

inline json optimization_to_json(const OptimizationResult& r) {
  return json{{"minimum", r.minimum},
              {"best_basis", basis_to_json(r.best_basis)},
              {"best_params", params_to_json(r.best_params)},
              {"starts_run", r.starts_run},
              {"starts_converged", r.starts_converged},
              {"evaluations", r.evaluations},
              {"converged", r.converged}};
}

inline json ledger_to_json(const WorkLedger& l) {
  return json{{"kT", l.kT},
              {"w_plus", l.w_plus},
              {"w_minus", l.w_minus},
              {"w_classical", l.w_classical},
              {"w_quantum", l.w_quantum},
              {"advantage", l.advantage},
              {"deficit_lower_bound", l.deficit_lower_bound},
              {"basis_used", basis_to_json(l.basis_used)}};
}

inline json nested_to_json(const NestedSpec& spec) {
  json branches = json::array();
  for (const auto& b : spec.branches) {
    json state_re = json::array(), state_im = json::array();
    for (const auto& amp : b.state) {
      state_re.push_back(amp.real());
      state_im.push_back(amp.imag());
    }
    json branch{{"probability", b.probability},
                {"state", {{"re", state_re}, {"im", state_im}}}};
    if (b.child)
      branch["child"] = nested_to_json(*b.child);
    else if (b.leaf)
      branch["leaf"] = density_to_json(*b.leaf);
    branches.push_back(std::move(branch));
  }
  return json{{"schema", kSchemaTag},
              {"side", spec.side},
              {"dim", spec.dim},
              {"branches", std::move(branches)}};
}

inline NestedSpec nested_from_json(const json& j) {
  detail::check_schema(j);
  if (!j.contains("side") || !j.contains("dim") || !j.contains("branches"))
    throw ParseError("nested document needs side, dim and branches");
  NestedSpec spec;
  spec.side = j.at("side").get<std::string>();
  spec.dim = j.at("dim").get<int>();
  for (const auto& jb : j.at("branches")) {
    NestedBranch branch;
    branch.probability = jb.at("probability").get<double>();
    const json& state = jb.at("state");
    if (state.is_number_integer()) {
      branch.state = basis_ket(spec.dim, state.get<int>());
    } else if (state.is_object()) {
      const json& re = state.at("re");
      const json& im = state.at("im");
      if (re.size() != im.size()) throw ParseError("state re/im sizes differ");
      for (size_t i = 0; i < re.size(); ++i)
        branch.state.emplace_back(re.at(i).get<double>(),
                                  im.at(i).get<double>());
    } else {
      throw ParseError("branch state must be an index or {re, im}");
    }
    const bool has_child = jb.contains("child");
    const bool has_leaf = jb.contains("leaf");
    if (has_child == has_leaf)
      throw ParseError("branch needs exactly one of child or leaf");
    if (has_child)
      branch.child =
          std::make_shared<NestedSpec>(nested_from_json(jb.at("child")));
    else
      branch.leaf = density_from_json(jb.at("leaf"));
    spec.branches.push_back(std::move(branch));
  }
  return spec;
}

inline json pure_state_to_json(const PureState& psi) {
  json re = json::array(), im = json::array();
  for (const auto& amp : psi.amplitudes) {
    re.push_back(amp.real());
    im.push_back(amp.imag());
  }
  return json{{"qubit_labels", psi.qubit_labels},
              {"re", std::move(re)},
              {"im", std::move(im)}};
}

inline json cycle_to_json(const CycleOutcome& c) {
  return json{{"schema", kSchemaTag},
              {"final_state", pure_state_to_json(c.final_state)},
              {"rho_a", density_to_json(c.rho_a)},
              {"rho_s", density_to_json(c.rho_s)},
              {"rho_d", density_to_json(c.rho_d)},
              {"h_a", von_neumann_entropy(c.rho_a)},
              {"h_s", von_neumann_entropy(c.rho_s)},
              {"h_d", von_neumann_entropy(c.rho_d)},
              {"ledger", ledger_to_json(c.ledger)},
              {"harvested_work", c.harvested_work},
              {"kT", c.kT}};
}

inline json classical_cycle_to_json(const ClassicalCycleOutcome& c) {
  json finals = json::array();
  for (const auto& psi : c.branch_finals)
    finals.push_back(pure_state_to_json(psi));
  return json{{"schema", kSchemaTag},
              {"branch_finals", std::move(finals)},
              {"rho_a", density_to_json(c.rho_a)},
              {"rho_s", density_to_json(c.rho_s)},
              {"rho_d", density_to_json(c.rho_d)},
              {"h_a", von_neumann_entropy(c.rho_a)},
              {"h_s", von_neumann_entropy(c.rho_s)},
              {"h_d", von_neumann_entropy(c.rho_d)},
              {"ledger", ledger_to_json(c.ledger)},
              {"harvested_work", c.harvested_work},
              {"kT", c.kT}};
}

inline json trace_to_json(const ProtocolTrace& t) {
  json rounds = json::array();
  for (const auto& round : t.rounds) {
    json branches = json::array();
    for (const auto& b : round.branches)
      branches.push_back({{"path", b.path},
                          {"basis", basis_to_json(b.basis)},
                          {"outcome_probabilities", b.outcome_probabilities}});
    rounds.push_back({{"round", round.round_index},
                      {"side", round.side},
                      {"branches", std::move(branches)}});
  }
  return json{{"schema", kSchemaTag},
              {"rounds", std::move(rounds)},
              {"accessible_entropy_by_round", t.accessible_entropy_by_round},
              {"work_by_round", t.work_by_round},
              {"exchanges", t.exchanges},
              {"kT", t.kT},
              {"h_joint", t.h_joint}};
}

}  // namespace discordium
