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

#include "discordium/complex_matrix.hpp"
#include "discordium/errors.hpp"
#include "discordium/tolerances.hpp"

namespace discordium {

// Rank-1 projective measurement on one subsystem: `vectors` holds the basis
// kets as columns, orthonormal within tol::hermitian. Which operator it may
// be applied to is settled at use time by matching `target` and the column
// count against the operator's layout.
struct MeasurementBasis {
  std::string target;
  ComplexMatrix vectors;
};

// Validating constructor for arbitrary column sets.
inline MeasurementBasis make_basis(std::string target, ComplexMatrix vectors,
                                   double tolerance = tol::hermitian) {
  if (vectors.rows() != vectors.cols() || vectors.rows() < 2)
    throw ShapeMismatch("basis must be a square matrix of dimension >= 2");
  const int d = vectors.rows();
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      cplx dot = 0.0;
      for (int r = 0; r < d; ++r)
        dot += std::conj(vectors(r, a)) * vectors(r, b);
      const double want = (a == b) ? 1.0 : 0.0;
      if (std::abs(dot - cplx(want)) > tolerance)
        throw NotOrthonormal("columns " + std::to_string(a) + "," +
                             std::to_string(b) + " deviate by " +
                             std::to_string(std::abs(dot - cplx(want))));
    }
  return MeasurementBasis{std::move(target), std::move(vectors)};
}

inline MeasurementBasis computational_basis(std::string target, int dim) {
  return MeasurementBasis{std::move(target), ComplexMatrix::identity(dim)};
}

// Two-dimensional +/- basis.
inline MeasurementBasis hadamard_basis(std::string target) {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix v(2, 2);
  v(0, 0) = s;
  v(1, 0) = s;
  v(0, 1) = s;
  v(1, 1) = -s;
  return MeasurementBasis{std::move(target), std::move(v)};
}

// True when both bases induce the same set of rank-1 projectors, i.e. the
// columns agree up to phases and ordering. This is the physically meaningful
// equality for projective measurements.
inline bool same_projectors(const MeasurementBasis& a,
                            const MeasurementBasis& b, double tolerance) {
  if (a.vectors.rows() != b.vectors.rows()) return false;
  const int d = a.vectors.rows();
  std::vector<bool> used(static_cast<size_t>(d), false);
  for (int i = 0; i < d; ++i) {
    bool matched = false;
    for (int j = 0; j < d && !matched; ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      cplx overlap = 0.0;
      for (int r = 0; r < d; ++r)
        overlap += std::conj(a.vectors(r, i)) * b.vectors(r, j);
      if (std::abs(std::abs(overlap) - 1.0) <= tolerance) {
        used[static_cast<size_t>(j)] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace discordium
