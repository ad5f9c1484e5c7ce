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

#include <algorithm>
#include <cmath>
#include <string>

#include "discordium/info.hpp"
#include "discordium/optimize.hpp"

namespace discordium {

// Work bookkeeping for one measure-extract-erase cycle, in units of kT.
// Energies are kT times bit counts; kT defaults to 1 and any Boltzmann-style
// prefactor is considered absorbed into it.
struct WorkLedger {
  double kT = 1.0;
  double w_plus = 0.0;     // extraction credit after a sharp record
  double w_minus = 0.0;    // cost of resetting the record
  double w_classical = 0.0;
  double w_quantum = 0.0;
  double advantage = 0.0;  // w_quantum - w_classical, exactly
  double deficit_lower_bound = 0.0;
  MeasurementBasis basis_used;
};

// Work extractable from the unmeasured side once the record is sharp:
// kT·(lg d_remainder − outcome-averaged remainder entropy).
inline double work_gain(const DensityOperator& rho,
                        const MeasurementBasis& basis, double kT = 1.0) {
  const int d_target = rho.layout().dim_of(basis.target);
  const int d_rest = rho.dimension() / d_target;
  return kT * (std::log2(static_cast<double>(d_rest)) -
               conditional_entropy(rho, basis));
}

// Cost of resetting the record: kT times the Shannon entropy of the outcome
// distribution in the chosen basis.
inline double erasure_cost(const DensityOperator& rho,
                           const MeasurementBasis& basis, double kT = 1.0) {
  detail::BranchProjection proj = detail::project_branches(rho, basis);
  return kT * shannon_entropy(proj.probabilities);
}

// Net cycle work for a local observer: extraction credit, plus the lg d
// credit for the measured side itself, minus the reset cost. Equal to
// kT·(lg d_total − accessible joint entropy at the basis).
inline double net_work_classical(const DensityOperator& rho,
                                 const MeasurementBasis& basis,
                                 double kT = 1.0) {
  const int d_target = rho.layout().dim_of(basis.target);
  return work_gain(rho, basis, kT) +
         kT * std::log2(static_cast<double>(d_target)) -
         erasure_cost(rho, basis, kT);
}

// Net cycle work with full (nonlocal) knowledge of the joint state:
// kT·(lg d_total − von Neumann joint entropy). Basis-free.
inline double net_work_quantum(const DensityOperator& rho, double kT = 1.0) {
  return kT * (std::log2(static_cast<double>(rho.dimension())) -
               von_neumann_entropy(rho));
}

// Lower bound on the work deficit between the two observers:
// kT·(max of the marginal entropies − joint entropy). May be negative for
// weakly correlated separable states; returned unclamped.
inline double deficit_lower_bound(const DensityOperator& rho, double kT = 1.0) {
  if (rho.layout().size() != 2)
    throw NotBipartite("deficit bound needs a two-part state");
  const auto labels = rho.layout().labels();
  const double h0 = von_neumann_entropy(partial_trace(rho, {labels[0]}));
  const double h1 = von_neumann_entropy(partial_trace(rho, {labels[1]}));
  return kT * (std::max(h0, h1) - von_neumann_entropy(rho));
}

// Full ledger for a bipartite state, with the classical side evaluated at
// the least-discord basis. The measured side defaults to the second layout
// part (the apparatus slot in every factory state).
inline WorkLedger compute_ledger(const DensityOperator& rho, double kT = 1.0,
                                 const OptimizerConfig& config = {},
                                 const std::string& measured_override = "") {
  if (rho.layout().size() != 2)
    throw NotBipartite("ledger needs a two-part state");
  const std::string measured = measured_override.empty()
                                   ? rho.layout().parts()[1].label
                                   : measured_override;
  OptimizationResult best = least_discord(rho, measured, config);

  WorkLedger ledger;
  ledger.kT = kT;
  ledger.basis_used = best.best_basis;
  ledger.w_plus = work_gain(rho, ledger.basis_used, kT);
  ledger.w_minus = erasure_cost(rho, ledger.basis_used, kT);
  ledger.w_classical = net_work_classical(rho, ledger.basis_used, kT);
  ledger.w_quantum = net_work_quantum(rho, kT);
  ledger.advantage = ledger.w_quantum - ledger.w_classical;
  ledger.deficit_lower_bound = deficit_lower_bound(rho, kT);
  return ledger;
}

}  // namespace discordium
