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

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "discordium/info.hpp"
#include "discordium/optimize.hpp"
#include "discordium/states.hpp"

namespace discordium {

enum class Strategy { greedy, fixed };

// One measured branch within a round: which outcome path led here, the basis
// chosen for it and the outcome distribution it produced.
struct BranchRecord {
  std::vector<int> path;
  MeasurementBasis basis;
  std::vector<double> outcome_probabilities;
};

struct RoundRecord {
  int round_index = 0;
  std::string side;
  std::vector<BranchRecord> branches;
};

// Record of a multi-round local-measurement protocol.
// accessible_entropy_by_round[r-1] is the joint entropy the measuring
// parties hold after r rounds: the Shannon entropy of the outcome tree plus
// the outcome-weighted entropies of each still-unmeasured subsystem, read
// one subsystem at a time (the parties hold no joint machinery over the
// remainder). work_by_round is the matching extractable work.
struct ProtocolTrace {
  std::vector<RoundRecord> rounds;
  std::vector<double> accessible_entropy_by_round;
  std::vector<double> work_by_round;
  int exchanges = 0;  // alternations of the measuring side; no work charge
  double kT = 1.0;
  double h_joint = 0.0;  // von Neumann entropy of the input state
};

namespace detail {

// Outcome probabilities plus normalized remainders; handles the final round,
// where nothing is left after the measured side.
struct LocalMeasurement {
  std::vector<double> probabilities;
  std::vector<std::optional<DensityOperator>> remainders;
};

inline LocalMeasurement measure_side(const DensityOperator& state,
                                     const MeasurementBasis& basis) {
  LocalMeasurement out;
  if (state.layout().size() == 1) {
    const int d = state.dimension();
    if (basis.vectors.rows() != d)
      throw ShapeMismatch("basis does not match subsystem dimension");
    out.probabilities.resize(static_cast<size_t>(d));
    out.remainders.resize(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
      cplx p = 0.0;
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
          p += std::conj(basis.vectors(r, k)) * state.matrix()(r, c) *
               basis.vectors(c, k);
      out.probabilities[static_cast<size_t>(k)] = p.real();
    }
    return out;
  }
  BranchProjection proj = project_branches(state, basis);
  out.probabilities = proj.probabilities;
  out.remainders.resize(proj.blocks.size());
  for (size_t k = 0; k < proj.blocks.size(); ++k) {
    if (out.probabilities[k] <= tol::prob_floor) continue;
    out.remainders[k] = DensityOperator::unchecked(
        proj.remainder_layout,
        proj.blocks[k] * (1.0 / out.probabilities[k]));
  }
  return out;
}

// Residual charge of an unmeasured remainder: each leftover subsystem is
// worth its own marginal entropy, since no further measurement will combine
// them.
inline double marginal_charge(const DensityOperator& state) {
  if (state.layout().size() == 1) return von_neumann_entropy(state);
  double h = 0.0;
  for (const auto& part : state.layout().parts())
    h += von_neumann_entropy(partial_trace(state, {part.label}));
  return h;
}

// Greedy per-branch objective: the one-step accessible joint entropy of this
// branch (outcome record plus outcome-averaged remainder entropy). States
// whose branch structure matches the basis minimize it, which is what steers
// the protocol down a nested state's own staircase.
inline double one_step_accessible(const DensityOperator& state,
                                  const MeasurementBasis& basis) {
  LocalMeasurement m = measure_side(state, basis);
  double h = shannon_entropy(m.probabilities);
  for (size_t k = 0; k < m.remainders.size(); ++k)
    if (m.remainders[k])
      h += m.probabilities[k] * von_neumann_entropy(*m.remainders[k]);
  return h;
}

}  // namespace detail

// Runs `order.size()` rounds of conditional local measurements. Greedy picks
// each branch's basis by minimizing that branch's one-step accessible joint
// entropy with the basis optimizer; fixed applies caller-supplied bases (one
// per round, shared across that round's branches).
inline ProtocolTrace run_protocol(
    const DensityOperator& rho, const std::vector<std::string>& order,
    Strategy strategy, const std::vector<MeasurementBasis>& fixed_bases = {},
    const OptimizerConfig& config = {}, double kT = 1.0) {
  if (order.empty()) throw BadParameter("protocol needs at least one round");
  for (size_t i = 0; i < order.size(); ++i) {
    rho.layout().position_of(order[i]);  // UnknownLabel on foreign sides
    for (size_t j = 0; j < i; ++j)
      if (order[j] == order[i])
        throw DuplicateSide("side '" + order[i] + "' measured twice");
  }
  if (strategy == Strategy::fixed && fixed_bases.size() != order.size())
    throw BadParameter("fixed strategy needs one basis per round");

  struct Node {
    std::vector<int> path;
    double probability;
    std::optional<DensityOperator> state;
  };
  std::vector<Node> frontier{{{}, 1.0, rho}};

  ProtocolTrace trace;
  trace.kT = kT;
  trace.h_joint = von_neumann_entropy(rho);
  trace.exchanges = static_cast<int>(order.size()) - 1;
  const double lg_total = std::log2(static_cast<double>(rho.dimension()));

  for (size_t r = 0; r < order.size(); ++r) {
    const std::string& side = order[r];
    RoundRecord round;
    round.round_index = static_cast<int>(r) + 1;
    round.side = side;

    std::vector<Node> next;
    for (const Node& node : frontier) {
      if (!node.state || node.probability <= tol::prob_floor) continue;
      const DensityOperator& state = *node.state;
      const int dim = state.layout().dim_of(side);

      MeasurementBasis basis = computational_basis(side, dim);
      if (strategy == Strategy::fixed) {
        basis = fixed_bases[r];
        if (basis.target != side)
          throw BadParameter("fixed basis for round " + std::to_string(r + 1) +
                             " targets '" + basis.target + "', expected '" +
                             side + "'");
      } else {
        detail::BasisSearchOutcome search = detail::minimize_over_bases(
            side, dim,
            [&](const MeasurementBasis& b) {
              return detail::one_step_accessible(state, b);
            },
            config);
        basis = materialize_basis(BasisParams{side, search.params});
      }

      detail::LocalMeasurement measured = detail::measure_side(state, basis);
      round.branches.push_back(
          BranchRecord{node.path, basis, measured.probabilities});
      for (size_t k = 0; k < measured.probabilities.size(); ++k) {
        Node child;
        child.path = node.path;
        child.path.push_back(static_cast<int>(k));
        child.probability = node.probability * measured.probabilities[k];
        child.state = measured.remainders[k];
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);

    std::vector<double> tree_probs;
    tree_probs.reserve(frontier.size());
    double accessible = 0.0;
    for (const Node& node : frontier) {
      tree_probs.push_back(node.probability);
      if (node.state && node.probability > tol::prob_floor)
        accessible += node.probability * detail::marginal_charge(*node.state);
    }
    accessible += shannon_entropy(tree_probs);
    trace.accessible_entropy_by_round.push_back(accessible);
    trace.work_by_round.push_back(kT * (lg_total - accessible));
    trace.rounds.push_back(std::move(round));
  }
  return trace;
}

// Depth-ordered measured sides of a nested spec (one side per level).
inline std::vector<std::string> nested_sides(const NestedSpec& spec) {
  std::vector<std::string> order;
  const NestedSpec* node = &spec;
  while (true) {
    order.push_back(node->side);
    const NestedSpec* deeper = nullptr;
    for (const auto& branch : node->branches)
      if (branch.child) {
        deeper = branch.child.get();
        break;
      }
    if (!deeper) break;
    node = deeper;
  }
  return order;
}

// Smallest number of greedy rounds after which the accessible joint entropy
// meets the state's von Neumann entropy (within 1e-6): how many exchanges
// the measuring parties actually need before nothing is left to localize.
inline int rounds_to_exhaust(const NestedSpec& spec,
                             const OptimizerConfig& config = {}) {
  const DensityOperator rho = nested(spec);
  ProtocolTrace trace =
      run_protocol(rho, nested_sides(spec), Strategy::greedy, {}, config);
  for (size_t r = 0; r < trace.accessible_entropy_by_round.size(); ++r)
    if (trace.accessible_entropy_by_round[r] <= trace.h_joint + 1e-6)
      return static_cast<int>(r) + 1;
  throw NoConvergence("protocol never reached the joint entropy");
}

}  // namespace discordium
