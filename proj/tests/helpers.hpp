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

#ifndef DISCORDIUM_TESTS_HELPERS_HPP_
#define DISCORDIUM_TESTS_HELPERS_HPP_

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "discordium/basis.hpp"
#include "discordium/complex_matrix.hpp"
#include "discordium/density.hpp"
#include "discordium/layout.hpp"
#include "discordium/states.hpp"

namespace testutil {

using discordium::ComplexMatrix;
using discordium::cplx;
using discordium::DensityOperator;

// Conjugates one subsystem by a unitary: (I ⊗ U ⊗ I) rho (...)†.
inline DensityOperator rotate_part(const DensityOperator& rho,
                                   const std::string& label,
                                   const ComplexMatrix& u) {
  ComplexMatrix full(1);
  full(0, 0) = 1.0;
  for (const auto& part : rho.layout().parts()) {
    if (part.label == label) {
      full = discordium::kron(full, u);
    } else {
      full = discordium::kron(full, ComplexMatrix::identity(part.dim));
    }
  }
  ComplexMatrix rotated = full * rho.matrix() * full.adjoint();
  return DensityOperator::unchecked(rho.layout(), std::move(rotated));
}

// Columns of a random unitary, reusing the orthonormal-frame generator.
inline ComplexMatrix random_unitary(int dim, unsigned long long seed) {
  return discordium::random_basis(dim, seed, "T").vectors;
}

// |<col_i(a) | col_j(b)>|
inline double column_overlap(const ComplexMatrix& a, int i,
                             const ComplexMatrix& b, int j) {
  cplx acc = 0.0;
  for (int r = 0; r < a.rows(); ++r) acc += std::conj(a(r, i)) * b(r, j);
  return std::abs(acc);
}

}  // namespace testutil

#endif  // DISCORDIUM_TESTS_HELPERS_HPP_
