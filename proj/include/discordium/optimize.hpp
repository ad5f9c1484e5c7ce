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
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "discordium/basis_params.hpp"
#include "discordium/info.hpp"
#include "discordium/rng.hpp"

namespace discordium {

struct OptimizerConfig {
  uint64_t seed = 1;
  int n_starts = 32;
  int max_evals = 2000;  // per start
  double tol = 1e-9;     // simplex diameter for per-start convergence
};

struct OptimizationResult {
  double minimum = 0.0;
  MeasurementBasis best_basis;
  BasisParams best_params;
  int starts_run = 0;
  int starts_converged = 0;
  long evaluations = 0;
  // False when no start met the convergence tolerance; the best point found
  // is still reported. The CLI surfaces this as a distinct exit code.
  bool converged = false;
};

namespace detail {

struct LocalSearchOutcome {
  std::vector<double> x;
  double value = 0.0;
  bool converged = false;
};

// Nelder-Mead simplex descent. The objective must be total; parameters are
// unbounded (every objective in this library is periodic in each parameter).
inline LocalSearchOutcome nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& x0, double step, double tol, int max_evals,
    long& evaluations) {
  const size_t n = x0.size();
  struct Vertex {
    std::vector<double> x;
    double value;
  };
  std::vector<Vertex> simplex;
  simplex.reserve(n + 1);
  auto eval = [&](const std::vector<double>& x) {
    ++evaluations;
    return f(x);
  };
  int budget = max_evals;
  simplex.push_back({x0, eval(x0)});
  --budget;
  for (size_t i = 0; i < n && budget > 0; ++i) {
    std::vector<double> x = x0;
    x[i] += step;
    simplex.push_back({std::move(x), 0.0});
    simplex.back().value = eval(simplex.back().x);
    --budget;
  }
  while (simplex.size() < n + 1) simplex.push_back(simplex.front());

  auto by_value = [](const Vertex& a, const Vertex& b) {
    return a.value < b.value;
  };
  std::sort(simplex.begin(), simplex.end(), by_value);

  auto diameter = [&]() {
    double worst = 0.0;
    for (size_t i = 1; i < simplex.size(); ++i) {
      double dist = 0.0;
      for (size_t k = 0; k < n; ++k) {
        const double d = simplex[i].x[k] - simplex[0].x[k];
        dist += d * d;
      }
      worst = std::max(worst, std::sqrt(dist));
    }
    return worst;
  };

  bool converged = false;
  while (budget > 0) {
    if (diameter() < tol) {
      converged = true;
      break;
    }
    // Centroid of all but the worst vertex.
    std::vector<double> centroid(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
      for (size_t v = 0; v + 1 < simplex.size(); ++v)
        centroid[i] += simplex[v].x[i];
      centroid[i] /= static_cast<double>(n);
    }
    const Vertex& worst = simplex.back();
    auto blend = [&](double t) {
      std::vector<double> x(n);
      for (size_t i = 0; i < n; ++i)
        x[i] = centroid[i] + t * (centroid[i] - worst.x[i]);
      return x;
    };

    std::vector<double> reflected = blend(1.0);
    const double fr = eval(reflected);
    --budget;
    if (fr < simplex[0].value) {
      std::vector<double> expanded = blend(2.0);
      const double fe = eval(expanded);
      --budget;
      if (fe < fr)
        simplex.back() = {std::move(expanded), fe};
      else
        simplex.back() = {std::move(reflected), fr};
    } else if (fr < simplex[simplex.size() - 2].value) {
      simplex.back() = {std::move(reflected), fr};
    } else {
      std::vector<double> contracted = blend(fr < worst.value ? 0.5 : -0.5);
      const double fc = eval(contracted);
      --budget;
      if (fc < std::min(fr, worst.value)) {
        simplex.back() = {std::move(contracted), fc};
      } else {
        // Shrink toward the best vertex.
        for (size_t v = 1; v < simplex.size() && budget > 0; ++v) {
          for (size_t i = 0; i < n; ++i)
            simplex[v].x[i] =
                simplex[0].x[i] + 0.5 * (simplex[v].x[i] - simplex[0].x[i]);
          simplex[v].value = eval(simplex[v].x);
          --budget;
        }
      }
    }
    std::sort(simplex.begin(), simplex.end(), by_value);
  }
  return {simplex[0].x, simplex[0].value, converged};
}

// Additive quasi-random sequence over [0,1)^n with per-run offsets; spreads
// restart points evenly over the parameter torus.
class WeylSequence {
 public:
  WeylSequence(size_t dims, uint64_t seed) : offsets_(dims), alphas_(dims) {
    static constexpr int primes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                     23, 29, 31, 37, 41, 43, 47, 53};
    Rng rng(seed);
    for (size_t i = 0; i < dims; ++i) {
      offsets_[i] = rng.uniform();
      const double root = std::sqrt(
          static_cast<double>(primes[i % (sizeof(primes) / sizeof(int))]));
      alphas_[i] = root - std::floor(root);
    }
  }

  std::vector<double> next() {
    ++index_;
    std::vector<double> x(offsets_.size());
    for (size_t i = 0; i < x.size(); ++i) {
      const double v = offsets_[i] + static_cast<double>(index_) * alphas_[i];
      x[i] = v - std::floor(v);
    }
    return x;
  }

 private:
  std::vector<double> offsets_;
  std::vector<double> alphas_;
  long index_ = 0;
};

struct BasisSearchOutcome {
  double value = 0.0;
  std::vector<double> params;
  int starts_run = 0;
  int starts_converged = 0;
  long evaluations = 0;
  bool converged = false;
};

// Multi-start minimization of a scalar function of a measurement basis on a
// d-dimensional subsystem. Start 0 sits at the computational basis, the rest
// are quasi-random over the torus. For qubits an exhaustive (theta, phi)
// grid, refined twice and polished, runs as well; the smaller value wins.
// Given the same config the outcome is identical run to run; value ties keep
// the earliest start.
inline BasisSearchOutcome minimize_over_bases(
    const std::string& target, int dim,
    const std::function<double(const MeasurementBasis&)>& objective,
    const OptimizerConfig& config) {
  const size_t n_params = static_cast<size_t>(dim) * (dim - 1);
  BasisSearchOutcome out;
  auto eval_params = [&](const std::vector<double>& p) {
    return objective(materialize_basis(BasisParams{target, p}));
  };

  auto consider = [&](const std::vector<double>& p, double value,
                      bool converged) {
    ++out.starts_run;
    if (converged) ++out.starts_converged;
    if (out.starts_run == 1 || value < out.value) {
      out.value = value;
      out.params = p;
    }
  };

  WeylSequence torus(n_params, config.seed);
  for (int s = 0; s < std::max(1, config.n_starts); ++s) {
    std::vector<double> x0(n_params, 0.0);
    if (s > 0) {
      x0 = torus.next();
      for (size_t i = 0; i < n_params; ++i)
        x0[i] *= (i % 2 == 0) ? M_PI : 2.0 * M_PI;
    }
    LocalSearchOutcome local =
        nelder_mead(eval_params, x0, 0.35, config.tol, config.max_evals,
                    out.evaluations);
    consider(local.x, local.value, local.converged);
  }

  if (dim == 2) {
    // Dense scan of the Bloch angles, refined twice around the best cell.
    double best_theta = 0.0, best_phi = 0.0;
    double best_value = 0.0;
    bool first = true;
    double theta_lo = 0.0, theta_hi = M_PI;
    double phi_lo = 0.0, phi_hi = 2.0 * M_PI;
    int points = 64;
    for (int level = 0; level < 3; ++level) {
      const double dt = (theta_hi - theta_lo) / (points - 1);
      const double dp = (phi_hi - phi_lo) / (points - 1);
      for (int i = 0; i < points; ++i)
        for (int j = 0; j < points; ++j) {
          const double theta = theta_lo + i * dt;
          const double phi = phi_lo + j * dp;
          ++out.evaluations;
          const double v = eval_params({theta, phi});
          if (first || v < best_value) {
            first = false;
            best_value = v;
            best_theta = theta;
            best_phi = phi;
          }
        }
      theta_lo = std::max(0.0, best_theta - dt);
      theta_hi = std::min(M_PI, best_theta + dt);
      phi_lo = best_phi - dp;
      phi_hi = best_phi + dp;
      points = 17;
    }
    LocalSearchOutcome polish =
        nelder_mead(eval_params, {best_theta, best_phi}, 0.02, config.tol,
                    config.max_evals, out.evaluations);
    if (polish.value <= best_value)
      consider(polish.x, polish.value, polish.converged);
    else
      consider({best_theta, best_phi}, best_value, false);
  }

  out.converged = out.starts_converged > 0;
  return out;
}

}  // namespace detail

// Least discord over rank-1 projective measurements of `measured`: minimizes
// the measurement-based joint entropy (record plus conditional term, the sum
// minimized jointly) and subtracts the von Neumann joint entropy.
inline OptimizationResult least_discord(const DensityOperator& rho,
                                        const std::string& measured,
                                        const OptimizerConfig& config = {}) {
  if (rho.layout().size() < 2)
    throw NotBipartite("least discord needs an unmeasured remainder");
  const int dim = rho.layout().dim_of(measured);
  const double h_joint = von_neumann_entropy(rho);

  detail::BasisSearchOutcome search = detail::minimize_over_bases(
      measured, dim,
      [&](const MeasurementBasis& b) {
        return accessible_joint_entropy(rho, b);
      },
      config);

  OptimizationResult result;
  result.minimum = search.value - h_joint;
  result.best_params = BasisParams{measured, search.params};
  result.best_basis = materialize_basis(result.best_params);
  result.starts_run = search.starts_run;
  result.starts_converged = search.starts_converged;
  result.evaluations = search.evaluations;
  result.converged = search.converged;
  return result;
}

// Variant that minimizes only the conditional term and charges the apparatus
// at its pre-measurement marginal entropy. Never exceeds least_discord.
inline OptimizationResult least_discord_alt(const DensityOperator& rho,
                                            const std::string& measured,
                                            const OptimizerConfig& config = {}) {
  if (rho.layout().size() < 2)
    throw NotBipartite("least discord needs an unmeasured remainder");
  const int dim = rho.layout().dim_of(measured);
  const double h_joint = von_neumann_entropy(rho);
  const double h_a_pre = von_neumann_entropy(partial_trace(rho, {measured}));

  detail::BasisSearchOutcome search = detail::minimize_over_bases(
      measured, dim,
      [&](const MeasurementBasis& b) { return conditional_entropy(rho, b); },
      config);

  OptimizationResult result;
  result.minimum = h_a_pre + search.value - h_joint;
  result.best_params = BasisParams{measured, search.params};
  result.best_basis = materialize_basis(result.best_params);
  result.starts_run = search.starts_run;
  result.starts_converged = search.starts_converged;
  result.evaluations = search.evaluations;
  result.converged = search.converged;
  return result;
}

// Directional asymmetry of the least discord: positive when measuring side_s
// is the cheaper way to localize the correlations, negative the other way.
// Antisymmetric under swapping the labels by construction.
inline double polarization(const DensityOperator& rho,
                           const std::string& side_s, const std::string& side_a,
                           const OptimizerConfig& config = {}) {
  return least_discord(rho, side_a, config).minimum -
         least_discord(rho, side_s, config).minimum;
}

}  // namespace discordium
