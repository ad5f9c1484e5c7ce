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

#include "discordium/basis.hpp"
#include "discordium/complex_matrix.hpp"
#include "discordium/errors.hpp"

namespace discordium {

// Search-space coordinates for a basis on one subsystem: a plane-rotation
// product with one angle and one phase per coordinate plane, d(d-1) reals
// for dimension d, laid out as (theta_01, phi_01, theta_02, phi_02, ...)
// over planes (0,1), (0,2), ..., (d-2,d-1).
struct BasisParams {
  std::string target;
  std::vector<double> params;
};

inline int dimension_for_param_count(size_t count) {
  // d(d-1) = count
  const double d = (1.0 + std::sqrt(1.0 + 4.0 * static_cast<double>(count))) / 2.0;
  const int di = static_cast<int>(std::lround(d));
  if (di < 2 || static_cast<size_t>(di) * (di - 1) != count)
    throw BadParamCount("parameter count " + std::to_string(count) +
                        " is not d(d-1) for any dimension d >= 2");
  return di;
}

// Deterministic map from parameters to an orthonormal basis. For a qubit the
// single plane gives columns (cos t/2, e^{i p} sin t/2) and its orthogonal
// complement.
inline MeasurementBasis materialize_basis(const BasisParams& p) {
  const int d = dimension_for_param_count(p.params.size());
  ComplexMatrix u = ComplexMatrix::identity(d);
  size_t next = 0;
  for (int i = 0; i < d - 1; ++i)
    for (int j = i + 1; j < d; ++j) {
      const double half = p.params[next++] / 2.0;
      const double phase = p.params[next++];
      const double c = std::cos(half);
      const double s = std::sin(half);
      const cplx lower = std::polar(s, phase);
      const cplx upper = -std::polar(s, -phase);
      // Right-multiply by the plane rotation; only columns i and j move.
      for (int r = 0; r < d; ++r) {
        const cplx ui = u(r, i);
        const cplx uj = u(r, j);
        u(r, i) = ui * c + uj * lower;
        u(r, j) = ui * upper + uj * c;
      }
    }
  return MeasurementBasis{p.target, std::move(u)};
}

}  // namespace discordium
