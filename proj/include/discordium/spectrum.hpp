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

#include <Eigen/Dense>
#include <algorithm>
#include <numeric>
#include <vector>

#include "discordium/complex_matrix.hpp"

namespace discordium {

// Eigensystem of a Hermitian operator. Eigenvalues are sorted descending;
// eigenvectors.column(k) belongs to eigenvalues[k].
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

namespace detail {

using EigenCMat =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline EigenCMat to_eigen(const ComplexMatrix& m) {
  return Eigen::Map<const EigenCMat>(m.data().data(), m.rows(), m.cols());
}

// Eigenvalues only, descending. Input must be square and Hermitian up to
// round-off; only the lower triangle is read.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<EigenCMat> solver(to_eigen(m),
                                                  Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + m.rows());
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

inline Spectrum hermitian_eigensystem(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<EigenCMat> solver(to_eigen(m));
  const int n = m.rows();
  Spectrum s;
  s.eigenvalues.resize(n);
  s.eigenvectors = ComplexMatrix(n, n);
  // Eigen reports ascending order; flip to descending.
  for (int k = 0; k < n; ++k) {
    const int src = n - 1 - k;
    s.eigenvalues[k] = solver.eigenvalues()(src);
    for (int r = 0; r < n; ++r)
      s.eigenvectors(r, k) = solver.eigenvectors()(r, src);
  }
  return s;
}

}  // namespace detail

}  // namespace discordium
