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
#include <utility>
#include <vector>

#include "discordium/complex_matrix.hpp"
#include "discordium/errors.hpp"
#include "discordium/layout.hpp"
#include "discordium/spectrum.hpp"
#include "discordium/tolerances.hpp"

namespace discordium {

// Immutable density operator over a labeled tensor-product layout. Construct
// through validate() (admissibility checks, gentle repair of round-off) or,
// for intermediates that are admissible by construction, through unchecked().
class DensityOperator {
 public:
  const SubsystemLayout& layout() const noexcept { return layout_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  int dimension() const noexcept { return matrix_.rows(); }

  // No admissibility checks. Internal use: measurement branches, partial
  // traces and factory outputs are admissible by construction.
  static DensityOperator unchecked(SubsystemLayout layout,
                                   ComplexMatrix matrix) {
    return DensityOperator(std::move(layout), std::move(matrix));
  }

 private:
  DensityOperator(SubsystemLayout layout, ComplexMatrix matrix)
      : layout_(std::move(layout)), matrix_(std::move(matrix)) {}

  SubsystemLayout layout_;
  ComplexMatrix matrix_;
};

// Checks a raw matrix against a layout and returns it as a DensityOperator.
//
// Rejects: wrong shape (ShapeMismatch), Hermitian defect beyond
// tolerances.hermitian (NotHermitian), trace off unity beyond
// tolerances.trace (NotUnitTrace), eigenvalue below -tolerances.positivity
// (NotPositive).
//
// Eigenvalues in [-positivity, 0) are round-off: they are clipped to zero,
// the spectrum is renormalized to unit sum and the operator rebuilt from its
// eigenvectors. A matrix whose spectrum is already non-negative is stored
// exactly as given.
inline DensityOperator validate(const ComplexMatrix& matrix,
                                const SubsystemLayout& layout,
                                const Tolerances& tolerances = {}) {
  const int d = layout.total_dimension();
  if (matrix.rows() != d || matrix.cols() != d)
    throw ShapeMismatch("matrix is " + std::to_string(matrix.rows()) + "x" +
                        std::to_string(matrix.cols()) + ", layout needs " +
                        std::to_string(d) + "x" + std::to_string(d));
  const double herm = matrix.hermitian_defect();
  if (herm > tolerances.hermitian)
    throw NotHermitian("Hermitian defect " + std::to_string(herm));
  const cplx tr = matrix.trace();
  if (std::abs(tr - cplx(1.0)) > tolerances.trace)
    throw NotUnitTrace("trace deviates from 1 by " +
                       std::to_string(std::abs(tr - cplx(1.0))));

  Spectrum spec = detail::hermitian_eigensystem(matrix);
  const double lowest = spec.eigenvalues.back();
  if (lowest < -tolerances.positivity)
    throw NotPositive("eigenvalue " + std::to_string(lowest));
  if (lowest >= 0.0)
    return DensityOperator::unchecked(layout, matrix);

  // Clip the round-off negatives, renormalize, rebuild.
  double total = 0.0;
  for (double& v : spec.eigenvalues) {
    if (v < 0.0) v = 0.0;
    total += v;
  }
  ComplexMatrix rebuilt(d, d);
  for (int k = 0; k < d; ++k) {
    const double w = spec.eigenvalues[k] / total;
    if (w == 0.0) continue;
    for (int r = 0; r < d; ++r) {
      const cplx vr = spec.eigenvectors(r, k) * w;
      for (int c = 0; c < d; ++c)
        rebuilt(r, c) += vr * std::conj(spec.eigenvectors(c, k));
    }
  }
  return DensityOperator::unchecked(layout, rebuilt);
}

// Composite of two operators on disjoint label sets; layout is a's parts
// followed by b's.
inline DensityOperator tensor_product(const DensityOperator& a,
                                      const DensityOperator& b) {
  std::vector<SubsystemLayout::Part> parts = a.layout().parts();
  for (const auto& p : b.layout().parts()) {
    if (a.layout().has(p.label))
      throw LabelCollision("label '" + p.label + "' present in both factors");
    parts.push_back(p);
  }
  return DensityOperator::unchecked(SubsystemLayout(std::move(parts)),
                                    kron(a.matrix(), b.matrix()));
}

namespace detail {

// Composite-index place values for a subset of layout positions: entry i of
// the result maps the i-th mixed-radix tuple over `positions` to its offset
// within the full index.
inline std::vector<int> index_bases(const SubsystemLayout& layout,
                                    const std::vector<size_t>& positions) {
  int count = 1;
  for (size_t p : positions) count *= layout.parts()[p].dim;
  std::vector<int> bases(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    int rem = i;
    int offset = 0;
    for (size_t k = 0; k < positions.size(); ++k) {
      int radix = 1;
      for (size_t j = k + 1; j < positions.size(); ++j)
        radix *= layout.parts()[positions[j]].dim;
      const int digit = rem / radix;
      rem %= radix;
      offset += digit * layout.stride_of(positions[k]);
    }
    bases[static_cast<size_t>(i)] = offset;
  }
  return bases;
}

}  // namespace detail

// Reduced state on `keep_labels`; the kept parts stay in their original
// layout order. Throws UnknownLabel for foreign labels, InvalidLayout when
// nothing is kept, LabelCollision on repeats.
inline DensityOperator partial_trace(const DensityOperator& rho,
                                     const std::vector<std::string>& keep_labels) {
  const SubsystemLayout& layout = rho.layout();
  if (keep_labels.empty()) throw InvalidLayout("must keep at least one part");
  std::vector<bool> keep(layout.size(), false);
  for (const auto& label : keep_labels) {
    const size_t pos = layout.position_of(label);
    if (keep[pos]) throw LabelCollision("label '" + label + "' repeated");
    keep[pos] = true;
  }

  std::vector<SubsystemLayout::Part> kept_parts;
  std::vector<size_t> kept_pos, traced_pos;
  for (size_t i = 0; i < layout.size(); ++i) {
    if (keep[i]) {
      kept_parts.push_back(layout.parts()[i]);
      kept_pos.push_back(i);
    } else {
      traced_pos.push_back(i);
    }
  }
  if (traced_pos.empty()) return rho;

  const std::vector<int> kept_base = detail::index_bases(layout, kept_pos);
  const std::vector<int> traced_base = detail::index_bases(layout, traced_pos);
  const int dk = static_cast<int>(kept_base.size());

  ComplexMatrix out(dk, dk);
  for (int r = 0; r < dk; ++r)
    for (int c = 0; c < dk; ++c) {
      cplx sum = 0.0;
      for (int t : traced_base)
        sum += rho.matrix()(kept_base[r] + t, kept_base[c] + t);
      out(r, c) = sum;
    }
  return DensityOperator::unchecked(SubsystemLayout(std::move(kept_parts)),
                                    std::move(out));
}

// Full eigensystem of the operator, eigenvalues descending.
inline Spectrum eigendecompose(const DensityOperator& rho) {
  return detail::hermitian_eigensystem(rho.matrix());
}

}  // namespace discordium
