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

namespace discordium {

// Numerical tolerances used across the library. Entropies are measured in
// bits throughout and eigenvalues at or below prob_floor are treated as
// exact zeros inside entropy sums.
namespace tol {

inline constexpr double hermitian = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double positivity = 1e-9;
inline constexpr double reconstruction = 1e-8;
inline constexpr double entropy = 1e-9;
inline constexpr double prob_floor = 1e-12;

}  // namespace tol

// Admissibility thresholds for density-operator validation. Callers may
// tighten or loosen them per call; defaults match the library-wide values.
struct Tolerances {
  double hermitian = tol::hermitian;
  double trace = tol::trace;
  double positivity = tol::positivity;
};

}  // namespace discordium
