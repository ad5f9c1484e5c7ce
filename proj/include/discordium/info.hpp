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
#include <optional>
#include <string>
#include <vector>

#include "discordium/basis.hpp"
#include "discordium/density.hpp"
#include "discordium/errors.hpp"
#include "discordium/tolerances.hpp"

namespace discordium {

// All entropies in this library are base-2 (bits). Terms with probability at
// or below tol::prob_floor contribute exactly zero (0·lg 0 := 0); this also
// absorbs round-off negatives from eigensolves.
inline double shannon_entropy(const std::vector<double>& probs) {
  double h = 0.0;
  for (double p : probs)
    if (p > tol::prob_floor) h -= p * std::log2(p);
  return h;
}

inline double binary_entropy(double p) {
  return shannon_entropy({p, 1.0 - p});
}

inline double von_neumann_entropy(const DensityOperator& rho) {
  return shannon_entropy(detail::hermitian_eigenvalues(rho.matrix()));
}

// One measurement outcome: its probability and the normalized state of the
// unmeasured remainder. Outcomes with probability <= tol::prob_floor carry
// no state and are skipped by every entropy average.
struct ConditionalBranch {
  int outcome = 0;
  double probability = 0.0;
  std::optional<DensityOperator> state;
};

namespace detail {

// Shared projection kernel: unnormalized remainder blocks <A_k|rho|A_k> and
// their traces (the outcome probabilities).
struct BranchProjection {
  SubsystemLayout remainder_layout;
  std::vector<double> probabilities;
  std::vector<ComplexMatrix> blocks;  // unnormalized, trace = probability
};

inline BranchProjection project_branches(const DensityOperator& rho,
                                         const MeasurementBasis& basis) {
  const SubsystemLayout& layout = rho.layout();
  const size_t pos = layout.position_of(basis.target);
  const int dt = layout.parts()[pos].dim;
  if (basis.vectors.rows() != dt || basis.vectors.cols() != dt)
    throw ShapeMismatch("basis dimension " +
                        std::to_string(basis.vectors.rows()) +
                        " does not match subsystem dimension " +
                        std::to_string(dt));
  if (layout.size() < 2)
    throw InvalidLayout("measurement needs an unmeasured remainder");

  std::vector<size_t> kept_pos;
  for (size_t i = 0; i < layout.size(); ++i)
    if (i != pos) kept_pos.push_back(i);
  const std::vector<int> kept_base = index_bases(layout, kept_pos);
  const int stride = layout.stride_of(pos);
  const int dk = static_cast<int>(kept_base.size());

  BranchProjection out;
  out.remainder_layout = layout.without(basis.target);
  out.probabilities.resize(static_cast<size_t>(dt));
  out.blocks.reserve(static_cast<size_t>(dt));
  for (int k = 0; k < dt; ++k) {
    ComplexMatrix block(dk, dk);
    for (int r = 0; r < dk; ++r)
      for (int c = 0; c < dk; ++c) {
        cplx sum = 0.0;
        for (int a = 0; a < dt; ++a) {
          const cplx va = std::conj(basis.vectors(a, k));
          if (va == cplx(0.0)) continue;
          for (int b = 0; b < dt; ++b) {
            const cplx vb = basis.vectors(b, k);
            if (vb == cplx(0.0)) continue;
            sum += va * rho.matrix()(kept_base[r] + a * stride,
                                     kept_base[c] + b * stride) * vb;
          }
        }
        block(r, c) = sum;
      }
    out.probabilities[static_cast<size_t>(k)] = block.trace().real();
    out.blocks.push_back(std::move(block));
  }
  return out;
}

}  // namespace detail

// Conditional decomposition of rho induced by a rank-1 projective
// measurement of basis.target: outcome probabilities and normalized
// remainder states.
inline std::vector<ConditionalBranch> measure_branches(
    const DensityOperator& rho, const MeasurementBasis& basis) {
  detail::BranchProjection proj = detail::project_branches(rho, basis);
  std::vector<ConditionalBranch> out;
  out.reserve(proj.blocks.size());
  for (size_t k = 0; k < proj.blocks.size(); ++k) {
    ConditionalBranch branch;
    branch.outcome = static_cast<int>(k);
    branch.probability = proj.probabilities[k];
    if (branch.probability > tol::prob_floor) {
      ComplexMatrix normalized = proj.blocks[k] * (1.0 / branch.probability);
      branch.state = DensityOperator::unchecked(proj.remainder_layout,
                                                std::move(normalized));
    }
    out.push_back(std::move(branch));
  }
  return out;
}

// The pair as seen by someone who knows a measurement of basis.target took
// place but not its outcome: coherences between distinct basis states of the
// target are erased, everything else is kept. Layout is unchanged, and the
// state is a fixed point of this map exactly when the measurement cannot
// disturb it.
inline DensityOperator outsider_state(const DensityOperator& rho,
                                      const MeasurementBasis& basis) {
  const SubsystemLayout& layout = rho.layout();
  const size_t pos = layout.position_of(basis.target);
  const int dt = layout.parts()[pos].dim;
  detail::BranchProjection proj = detail::project_branches(rho, basis);

  std::vector<size_t> kept_pos;
  for (size_t i = 0; i < layout.size(); ++i)
    if (i != pos) kept_pos.push_back(i);
  const std::vector<int> kept_base = detail::index_bases(layout, kept_pos);
  const int stride = layout.stride_of(pos);
  const int dk = static_cast<int>(kept_base.size());

  ComplexMatrix out(rho.dimension(), rho.dimension());
  for (int k = 0; k < dt; ++k) {
    const ComplexMatrix& block = proj.blocks[static_cast<size_t>(k)];
    for (int a = 0; a < dt; ++a) {
      const cplx va = basis.vectors(a, k);
      if (va == cplx(0.0)) continue;
      for (int b = 0; b < dt; ++b) {
        const cplx vb = std::conj(basis.vectors(b, k));
        if (vb == cplx(0.0)) continue;
        for (int r = 0; r < dk; ++r)
          for (int c = 0; c < dk; ++c)
            out(kept_base[r] + a * stride, kept_base[c] + b * stride) +=
                va * block(r, c) * vb;
      }
    }
  }
  return DensityOperator::unchecked(layout, std::move(out));
}

// Outcome-averaged entropy of the unmeasured remainder after measuring
// basis.target.
inline double conditional_entropy(const DensityOperator& rho,
                                  const MeasurementBasis& basis) {
  detail::BranchProjection proj = detail::project_branches(rho, basis);
  double h = 0.0;
  for (size_t k = 0; k < proj.blocks.size(); ++k) {
    const double p = proj.probabilities[k];
    if (p <= tol::prob_floor) continue;
    std::vector<double> eigs = detail::hermitian_eigenvalues(proj.blocks[k]);
    for (double& e : eigs) e /= p;
    h += p * shannon_entropy(eigs);
  }
  return h;
}

// Joint entropy reachable through local measurement of basis.target: Shannon
// entropy of the outcome record plus the outcome-averaged remainder entropy.
inline double accessible_joint_entropy(const DensityOperator& rho,
                                       const MeasurementBasis& basis) {
  detail::BranchProjection proj = detail::project_branches(rho, basis);
  double h = shannon_entropy(proj.probabilities);
  for (size_t k = 0; k < proj.blocks.size(); ++k) {
    const double p = proj.probabilities[k];
    if (p <= tol::prob_floor) continue;
    std::vector<double> eigs = detail::hermitian_eigenvalues(proj.blocks[k]);
    for (double& e : eigs) e /= p;
    h += p * shannon_entropy(eigs);
  }
  return h;
}

// Entropic summary of one bipartite state / measurement-basis pair.
// mutual_i uses the fully symmetric (von Neumann) joint entropy; j_asym and
// accessible_joint use the measurement-based joint entropy; discord is their
// gap, and is non-negative up to tol::entropy for every basis.
struct InfoReport {
  double h_s = 0.0;
  double h_a = 0.0;
  double h_joint = 0.0;
  double mutual_i = 0.0;
  double j_asym = 0.0;
  double h_cond = 0.0;
  double accessible_joint = 0.0;
  double discord = 0.0;
};

inline double mutual_information(const DensityOperator& rho,
                                 const std::string& part_s,
                                 const std::string& part_a) {
  if (rho.layout().size() != 2)
    throw NotBipartite("mutual information needs a two-part state");
  const double h_s = von_neumann_entropy(partial_trace(rho, {part_s}));
  const double h_a = von_neumann_entropy(partial_trace(rho, {part_a}));
  return h_s + h_a - von_neumann_entropy(rho);
}

// The unmeasured remainder is treated as a single side, so the report is
// defined for any layout that leaves something unmeasured.
inline InfoReport discord_at_basis(const DensityOperator& rho,
                                   const MeasurementBasis& basis) {
  if (rho.layout().size() < 2)
    throw NotBipartite("discord needs an unmeasured remainder");
  const size_t pos = rho.layout().position_of(basis.target);
  std::vector<std::string> others;
  for (size_t i = 0; i < rho.layout().size(); ++i)
    if (i != pos) others.push_back(rho.layout().parts()[i].label);

  InfoReport report;
  report.h_s = von_neumann_entropy(partial_trace(rho, others));
  report.h_a = von_neumann_entropy(partial_trace(rho, {basis.target}));
  report.h_joint = von_neumann_entropy(rho);
  report.mutual_i = report.h_s + report.h_a - report.h_joint;

  detail::BranchProjection proj = detail::project_branches(rho, basis);
  const double h_record = shannon_entropy(proj.probabilities);
  double h_cond = 0.0;
  for (size_t k = 0; k < proj.blocks.size(); ++k) {
    const double p = proj.probabilities[k];
    if (p <= tol::prob_floor) continue;
    std::vector<double> eigs = detail::hermitian_eigenvalues(proj.blocks[k]);
    for (double& e : eigs) e /= p;
    h_cond += p * shannon_entropy(eigs);
  }
  report.h_cond = h_cond;
  report.accessible_joint = h_record + h_cond;
  report.discord = report.accessible_joint - report.h_joint;
  report.j_asym = report.h_s + report.h_a - report.accessible_joint;
  return report;
}

}  // namespace discordium
