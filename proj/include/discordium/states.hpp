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
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "discordium/basis.hpp"
#include "discordium/density.hpp"
#include "discordium/errors.hpp"
#include "discordium/rng.hpp"
#include "discordium/tolerances.hpp"

namespace discordium {

// Maximally entangled two-qubit pure state (|00> + |11>)/sqrt(2).
inline DensityOperator bell(const std::string& label_s = "S",
                            const std::string& label_a = "A") {
  ComplexMatrix m(4, 4);
  m(0, 0) = 0.5;
  m(0, 3) = 0.5;
  m(3, 0) = 0.5;
  m(3, 3) = 0.5;
  return DensityOperator::unchecked(
      make_layout({{label_s, 2}, {label_a, 2}}), std::move(m));
}

// Even classical mixture of |00><00| and |11><11|: same correlations as the
// entangled pair when both sides are read in the computational basis, but
// fully decohered.
inline DensityOperator classical_mixture(const std::string& label_s = "S",
                                         const std::string& label_a = "A") {
  ComplexMatrix m(4, 4);
  m(0, 0) = 0.5;
  m(3, 3) = 0.5;
  return DensityOperator::unchecked(
      make_layout({{label_s, 2}, {label_a, 2}}), std::move(m));
}

struct WernerSpec {
  double z = 0.0;
};

// Isotropic mixture (1-z)/4 * I + z * bell. Eigenvalues are (1+3z)/4 and a
// triple of (1-z)/4.
inline DensityOperator werner(const WernerSpec& spec,
                              const std::string& label_s = "S",
                              const std::string& label_a = "A") {
  if (!(spec.z >= 0.0 && spec.z <= 1.0))
    throw BadParameter("werner mixing parameter must lie in [0,1]");
  ComplexMatrix m(4, 4);
  const double off = (1.0 - spec.z) / 4.0;
  for (int i = 0; i < 4; ++i) m(i, i) = off;
  m(0, 0) += spec.z * 0.5;
  m(3, 3) += spec.z * 0.5;
  m(0, 3) += spec.z * 0.5;
  m(3, 0) += spec.z * 0.5;
  return DensityOperator::unchecked(
      make_layout({{label_s, 2}, {label_a, 2}}), std::move(m));
}

// Recursive description of a classically nested state: at each level one
// side carries an orthonormal set of branch states, and each branch holds
// either a deeper spec or a leaf operator. The realized operator is
//   rho = sum_i p_i |v_i><v_i| (on side) (x) rho_child_i
// with the side label first in the layout.
struct NestedSpec;

struct NestedBranch {
  double probability = 0.0;
  std::vector<cplx> state;  // ket on this level's side
  std::shared_ptr<const NestedSpec> child;  // exactly one of child / leaf
  std::optional<DensityOperator> leaf;
};

struct NestedSpec {
  std::string side;
  int dim = 0;
  std::vector<NestedBranch> branches;
};

inline std::vector<cplx> basis_ket(int dim, int index) {
  if (index < 0 || index >= dim)
    throw BadParameter("basis ket index out of range");
  std::vector<cplx> v(static_cast<size_t>(dim));
  v[static_cast<size_t>(index)] = 1.0;
  return v;
}

inline DensityOperator nested(const NestedSpec& spec) {
  if (spec.dim < 2) throw BadParameter("nested side dimension must be >= 2");
  if (spec.branches.empty())
    throw BadParameter("nested spec needs at least one branch");
  if (spec.branches.size() > static_cast<size_t>(spec.dim))
    throw NonOrthogonalBranches("more branches than the side dimension");

  double total = 0.0;
  for (const auto& b : spec.branches) {
    if (b.probability < 0.0)
      throw BadProbabilities("negative branch probability");
    total += b.probability;
  }
  if (std::abs(total - 1.0) > tol::trace)
    throw BadProbabilities("branch probabilities sum to " +
                           std::to_string(total));

  for (size_t i = 0; i < spec.branches.size(); ++i) {
    const auto& v = spec.branches[i].state;
    if (v.size() != static_cast<size_t>(spec.dim))
      throw BadParameter("branch state has wrong dimension");
    for (size_t j = 0; j <= i; ++j) {
      cplx dot = 0.0;
      for (int r = 0; r < spec.dim; ++r)
        dot += std::conj(spec.branches[j].state[static_cast<size_t>(r)]) *
               v[static_cast<size_t>(r)];
      const double want = (i == j) ? 1.0 : 0.0;
      if (std::abs(dot - cplx(want)) > 1e-8)
        throw NonOrthogonalBranches("branch states " + std::to_string(j) +
                                    "," + std::to_string(i) +
                                    " are not orthonormal");
    }
  }

  // Materialize children; all branches must agree on the remainder layout.
  std::vector<DensityOperator> children;
  children.reserve(spec.branches.size());
  for (const auto& b : spec.branches) {
    if (b.child && b.leaf)
      throw BadParameter("branch carries both a child spec and a leaf");
    if (b.child)
      children.push_back(nested(*b.child));
    else if (b.leaf)
      children.push_back(*b.leaf);
    else
      throw BadParameter("branch carries neither a child spec nor a leaf");
  }
  for (size_t i = 1; i < children.size(); ++i)
    if (children[i].layout() != children[0].layout())
      throw ShapeMismatch("branches disagree on the remainder layout");
  if (children[0].layout().has(spec.side))
    throw LabelCollision("side label '" + spec.side +
                         "' reappears deeper in the nesting");

  std::vector<SubsystemLayout::Part> parts;
  parts.push_back({spec.side, spec.dim});
  for (const auto& p : children[0].layout().parts()) parts.push_back(p);
  SubsystemLayout layout(std::move(parts));

  const int d_child = children[0].dimension();
  ComplexMatrix m(layout.total_dimension(), layout.total_dimension());
  for (size_t i = 0; i < spec.branches.size(); ++i) {
    const auto& branch = spec.branches[i];
    if (branch.probability <= tol::prob_floor) continue;
    const ComplexMatrix& chi = children[i].matrix();
    for (int a = 0; a < spec.dim; ++a) {
      const cplx va = branch.state[static_cast<size_t>(a)];
      if (va == cplx(0.0)) continue;
      for (int b = 0; b < spec.dim; ++b) {
        const cplx vb = std::conj(branch.state[static_cast<size_t>(b)]);
        if (vb == cplx(0.0)) continue;
        const cplx w = branch.probability * va * vb;
        for (int r = 0; r < d_child; ++r)
          for (int c = 0; c < d_child; ++c)
            m(a * d_child + r, b * d_child + c) += w * chi(r, c);
      }
    }
  }
  return DensityOperator::unchecked(std::move(layout), std::move(m));
}

namespace detail {

inline const std::vector<std::vector<cplx>>& flavor_kets(bool hadamard) {
  static const std::vector<std::vector<cplx>> comp = {{1.0, 0.0}, {0.0, 1.0}};
  static const double s = 1.0 / std::sqrt(2.0);
  static const std::vector<std::vector<cplx>> plus_minus = {{s, s}, {s, -s}};
  return hadamard ? plus_minus : comp;
}

inline NestedSpec staircase_node(int level, int depth, bool hadamard) {
  static const char* side_labels[] = {"A", "B", "C", "D"};
  NestedSpec node;
  node.side = side_labels[level - 1];
  node.dim = 2;
  const auto& kets = flavor_kets(hadamard);
  for (int k = 0; k < 2; ++k) {
    NestedBranch branch;
    branch.probability = 0.5;
    branch.state = kets[static_cast<size_t>(k)];
    if (level == depth) {
      // Leaf mirrors the deepest branch state, so the remainder is readable
      // exactly when this level's basis is known.
      ComplexMatrix proj(2, 2);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          proj(r, c) = kets[static_cast<size_t>(k)][static_cast<size_t>(r)] *
                       std::conj(kets[static_cast<size_t>(k)][static_cast<size_t>(c)]);
      branch.leaf = DensityOperator::unchecked(make_layout({{"S", 2}}),
                                               std::move(proj));
    } else {
      // Branch 0 receives computational sub-structure, branch 1 the
      // conjugate one; the two children are never co-diagonal.
      branch.child = std::make_shared<NestedSpec>(
          staircase_node(level + 1, depth, k == 1));
    }
    node.branches.push_back(std::move(branch));
  }
  return node;
}

}  // namespace detail

// Canonical nested family of depth n: sides A, B, C, D measured in turn,
// qubit remainder S. Each level's two branches carry computational versus
// conjugate sub-structure, so every deeper basis depends on the outcomes
// above it.
inline NestedSpec staircase(int depth) {
  if (depth < 1 || depth > 4)
    throw BadRange("staircase depth must be between 1 and 4");
  return detail::staircase_node(1, depth, false);
}

// Ginibre-measure random state: G G^dagger normalized, G filled with
// standard complex Gaussians. Deterministic per seed.
inline DensityOperator random_density(const SubsystemLayout& layout,
                                      uint64_t seed) {
  const int d = layout.total_dimension();
  Rng rng(seed);
  ComplexMatrix g(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) g(r, c) = cplx(rng.normal(), rng.normal());
  ComplexMatrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  rho = rho * (1.0 / tr);
  // Symmetrize away the last bits of round-off from the product.
  for (int r = 0; r < d; ++r)
    for (int c = r + 1; c < d; ++c) {
      const cplx avg = 0.5 * (rho(r, c) + std::conj(rho(c, r)));
      rho(r, c) = avg;
      rho(c, r) = std::conj(avg);
    }
  return DensityOperator::unchecked(layout, std::move(rho));
}

inline DensityOperator random_density(const std::vector<int>& dims,
                                      uint64_t seed) {
  std::vector<SubsystemLayout::Part> parts;
  if (dims.size() == 2) {
    parts = {{"S", dims[0]}, {"A", dims[1]}};
  } else {
    for (size_t i = 0; i < dims.size(); ++i)
      parts.push_back({"P" + std::to_string(i + 1), dims[i]});
  }
  return random_density(SubsystemLayout(std::move(parts)), seed);
}

// Haar-like random basis: complex Gaussian matrix orthonormalized column by
// column. Deterministic per seed.
inline MeasurementBasis random_basis(int dim, uint64_t seed,
                                     std::string target = "A") {
  Rng rng(seed);
  ComplexMatrix v(dim, dim);
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r) v(r, c) = cplx(rng.normal(), rng.normal());
  for (int c = 0; c < dim; ++c) {
    for (int prev = 0; prev < c; ++prev) {
      cplx overlap = 0.0;
      for (int r = 0; r < dim; ++r)
        overlap += std::conj(v(r, prev)) * v(r, c);
      for (int r = 0; r < dim; ++r) v(r, c) -= overlap * v(r, prev);
    }
    double norm = 0.0;
    for (int r = 0; r < dim; ++r) norm += std::norm(v(r, c));
    norm = std::sqrt(norm);
    for (int r = 0; r < dim; ++r) v(r, c) /= norm;
  }
  return MeasurementBasis{std::move(target), std::move(v)};
}

}  // namespace discordium
