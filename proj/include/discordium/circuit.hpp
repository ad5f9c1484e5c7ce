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
#include <string>
#include <vector>

#include "discordium/demon.hpp"
#include "discordium/density.hpp"
#include "discordium/errors.hpp"
#include "discordium/info.hpp"
#include "discordium/states.hpp"

namespace discordium {

// Pure multi-qubit state. The first label is the most significant bit of the
// amplitude index, matching the layout convention everywhere else.
struct PureState {
  std::vector<std::string> qubit_labels;
  std::vector<cplx> amplitudes;

  size_t position_of(const std::string& label) const {
    for (size_t i = 0; i < qubit_labels.size(); ++i)
      if (qubit_labels[i] == label) return i;
    throw UnknownLabel("no qubit labeled '" + label + "'");
  }
};

struct GateOp {
  std::string control;
  std::string target;
};

// Controlled bit flip: where the control qubit is 1, the target amplitude
// pair is swapped. A pure permutation of amplitudes, so the norm is
// preserved exactly.
inline PureState apply_cnot(const PureState& state, const GateOp& gate) {
  if (gate.control == gate.target)
    throw SelfControl("gate control equals target '" + gate.control + "'");
  const size_t n = state.qubit_labels.size();
  const size_t control_bit = n - 1 - state.position_of(gate.control);
  const size_t target_bit = n - 1 - state.position_of(gate.target);

  PureState out = state;
  const size_t cmask = size_t{1} << control_bit;
  const size_t tmask = size_t{1} << target_bit;
  for (size_t i = 0; i < out.amplitudes.size(); ++i)
    if ((i & cmask) && !(i & tmask))
      std::swap(out.amplitudes[i], out.amplitudes[i | tmask]);
  return out;
}

// Density operator of a subset of qubits, order preserved.
inline DensityOperator reduced_density(const PureState& state,
                                       const std::vector<std::string>& keep) {
  const size_t n = state.qubit_labels.size();
  std::vector<bool> kept(n, false);
  for (const auto& label : keep) {
    const size_t pos = state.position_of(label);
    if (kept[pos]) throw LabelCollision("label '" + label + "' repeated");
    kept[pos] = true;
  }
  std::vector<size_t> kept_pos, traced_pos;
  std::vector<SubsystemLayout::Part> parts;
  for (size_t i = 0; i < n; ++i) {
    if (kept[i]) {
      kept_pos.push_back(i);
      parts.push_back({state.qubit_labels[i], 2});
    } else {
      traced_pos.push_back(i);
    }
  }
  auto spread = [&](const std::vector<size_t>& positions, size_t value) {
    size_t full = 0;
    for (size_t k = positions.size(); k-- > 0;) {
      const size_t bit = n - 1 - positions[k];
      full |= (value & 1) << bit;
      value >>= 1;
    }
    return full;
  };
  const size_t dk = size_t{1} << kept_pos.size();
  const size_t dt = size_t{1} << traced_pos.size();
  ComplexMatrix m(static_cast<int>(dk), static_cast<int>(dk));
  for (size_t r = 0; r < dk; ++r) {
    const size_t rbase = spread(kept_pos, r);
    for (size_t c = 0; c < dk; ++c) {
      const size_t cbase = spread(kept_pos, c);
      cplx sum = 0.0;
      for (size_t t = 0; t < dt; ++t) {
        const size_t off = spread(traced_pos, t);
        sum += state.amplitudes[rbase | off] *
               std::conj(state.amplitudes[cbase | off]);
      }
      m(static_cast<int>(r), static_cast<int>(c)) = sum;
    }
  }
  return DensityOperator::unchecked(SubsystemLayout(std::move(parts)),
                                    std::move(m));
}

// One full cycle of the three-gate memory demon: copy the apparatus into the
// memory, use the memory to purify the system, then uncopy to reset the
// memory. `harvested_work` is what the final system and apparatus registers
// are worth once the memory is back in its ready state.
struct CycleOutcome {
  PureState final_state;
  DensityOperator rho_a;  // environment traced out
  DensityOperator rho_s;
  DensityOperator rho_d;
  WorkLedger ledger;  // bookkeeping for the input system-apparatus pair
  double harvested_work = 0.0;
  double kT = 1.0;
};

namespace detail {

inline PureState demon_initial(const cplx& alpha, const cplx& beta,
                               int branch_select) {
  // Qubits in canonical order S, D, A, E; memory and environment start |0>.
  PureState psi;
  psi.qubit_labels = {"S", "D", "A", "E"};
  psi.amplitudes.assign(16, cplx(0.0));
  if (branch_select < 0) {
    psi.amplitudes[0b0000] = alpha;   // |0_S 0_D 0_A 0_E>
    psi.amplitudes[0b1010] = beta;    // |1_S 0_D 1_A 0_E>
  } else if (branch_select == 0) {
    psi.amplitudes[0b0000] = 1.0;
  } else {
    psi.amplitudes[0b1010] = 1.0;
  }
  return psi;
}

inline PureState demon_evolve(PureState psi, bool decohere) {
  psi = apply_cnot(psi, {"A", "D"});            // memory copies the apparatus
  if (decohere) psi = apply_cnot(psi, {"D", "E"});  // record leaks out
  psi = apply_cnot(psi, {"D", "S"});            // memory purifies the system
  psi = apply_cnot(psi, {"A", "D"});            // memory reset
  return psi;
}

inline DensityOperator demon_input_pair(const cplx& alpha, const cplx& beta) {
  ComplexMatrix m(4, 4);
  m(0, 0) = alpha * std::conj(alpha);
  m(0, 3) = alpha * std::conj(beta);
  m(3, 0) = beta * std::conj(alpha);
  m(3, 3) = beta * std::conj(beta);
  return DensityOperator::unchecked(make_layout({{"S", 2}, {"A", 2}}),
                                    std::move(m));
}

inline double register_work(const DensityOperator& rho_s,
                            const DensityOperator& rho_a, double kT) {
  return kT * ((1.0 - von_neumann_entropy(rho_s)) +
               (1.0 - von_neumann_entropy(rho_a)));
}

}  // namespace detail

inline CycleOutcome run_demon_cycle(const cplx& alpha, const cplx& beta,
                                    bool decohere, double kT = 1.0,
                                    const OptimizerConfig& config = {}) {
  const double norm = std::norm(alpha) + std::norm(beta);
  if (std::abs(norm - 1.0) > tol::trace)
    throw NotNormalized("input amplitudes have norm " + std::to_string(norm));

  PureState final_state = detail::demon_evolve(
      detail::demon_initial(alpha, beta, -1), decohere);
  DensityOperator rho_a = reduced_density(final_state, {"A"});
  DensityOperator rho_s = reduced_density(final_state, {"S"});
  DensityOperator rho_d = reduced_density(final_state, {"D"});
  WorkLedger ledger =
      compute_ledger(detail::demon_input_pair(alpha, beta), kT, config);
  const double harvested = detail::register_work(rho_s, rho_a, kT);
  return CycleOutcome{std::move(final_state), std::move(rho_a),
                      std::move(rho_s),       std::move(rho_d),
                      std::move(ledger),      harvested,
                      kT};
}

// Cycle outcome for the decohered-correlation input, which evolves branch by
// branch: each branch stays pure, only their even mixture is available to
// the demon. Reduced operators refer to that mixture.
struct ClassicalCycleOutcome {
  std::vector<PureState> branch_finals;
  DensityOperator rho_a;
  DensityOperator rho_s;
  DensityOperator rho_d;
  WorkLedger ledger;
  double harvested_work = 0.0;
  double kT = 1.0;
};

inline ClassicalCycleOutcome run_classical_input_cycle(
    bool decohere, double kT = 1.0, const OptimizerConfig& config = {}) {
  std::vector<PureState> branch_finals;
  std::vector<DensityOperator> rho_s, rho_d, rho_a;
  for (int branch = 0; branch < 2; ++branch) {
    PureState final_state = detail::demon_evolve(
        detail::demon_initial(0.0, 0.0, branch), decohere);
    rho_s.push_back(reduced_density(final_state, {"S"}));
    rho_d.push_back(reduced_density(final_state, {"D"}));
    rho_a.push_back(reduced_density(final_state, {"A"}));
    branch_finals.push_back(std::move(final_state));
  }
  auto mix = [](const DensityOperator& a, const DensityOperator& b) {
    return DensityOperator::unchecked(a.layout(),
                                      a.matrix() * 0.5 + b.matrix() * 0.5);
  };
  DensityOperator mixed_s = mix(rho_s[0], rho_s[1]);
  DensityOperator mixed_d = mix(rho_d[0], rho_d[1]);
  DensityOperator mixed_a = mix(rho_a[0], rho_a[1]);
  WorkLedger ledger = compute_ledger(classical_mixture("S", "A"), kT, config);
  const double harvested = detail::register_work(mixed_s, mixed_a, kT);
  return ClassicalCycleOutcome{std::move(branch_finals), std::move(mixed_a),
                               std::move(mixed_s),       std::move(mixed_d),
                               std::move(ledger),        harvested,
                               kT};
}

}  // namespace discordium
