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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "discordium/density.hpp"
#include "discordium/errors.hpp"
#include "discordium/layout.hpp"
#include "discordium/states.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using discordium::ComplexMatrix;
using discordium::cplx;
using discordium::DensityOperator;
using discordium::SubsystemLayout;

TEST_CASE("layout validates and indexes parts") {
  SubsystemLayout layout = discordium::make_layout({{"S", 2}, {"A", 3}});
  REQUIRE(layout.total_dimension() == 6);
  REQUIRE(layout.position_of("S") == 0);
  REQUIRE(layout.position_of("A") == 1);
  REQUIRE(layout.dim_of("A") == 3);
  // First part owns the most significant digit.
  REQUIRE(layout.stride_of(0) == 3);
  REQUIRE(layout.stride_of(1) == 1);
  REQUIRE(layout.has("S"));
  REQUIRE_FALSE(layout.has("B"));
  REQUIRE_THROWS_AS(layout.position_of("B"), discordium::UnknownLabel);
  REQUIRE_THROWS_AS(discordium::make_layout({{"S", 2}, {"S", 2}}),
                    discordium::LabelCollision);
  REQUIRE_THROWS_AS(discordium::make_layout({{"S", 1}}),
                    discordium::InvalidLayout);
  REQUIRE_THROWS_AS(discordium::make_layout({}), discordium::InvalidLayout);

  SubsystemLayout rest = layout.without("S");
  REQUIRE(rest.size() == 1);
  REQUIRE(rest.parts()[0].label == "A");
}

TEST_CASE("validation rejects malformed matrices") {
  SubsystemLayout layout = discordium::make_layout({{"Q", 2}});

  ComplexMatrix wrong(3);
  REQUIRE_THROWS_AS(discordium::validate(wrong, layout),
                    discordium::ShapeMismatch);

  ComplexMatrix skew(2);
  skew(0, 0) = 0.5;
  skew(1, 1) = 0.5;
  skew(0, 1) = cplx(0.1, 0.0);
  skew(1, 0) = cplx(0.3, 0.0);
  REQUIRE_THROWS_AS(discordium::validate(skew, layout),
                    discordium::NotHermitian);

  ComplexMatrix traced(2);
  traced(0, 0) = 0.7;
  traced(1, 1) = 0.7;
  REQUIRE_THROWS_AS(discordium::validate(traced, layout),
                    discordium::NotUnitTrace);

  ComplexMatrix negative(2);
  negative(0, 0) = 1.2;
  negative(1, 1) = -0.2;
  REQUIRE_THROWS_AS(discordium::validate(negative, layout),
                    discordium::NotPositive);
}

TEST_CASE("validation clips eigenvalue dust and keeps clean input exact") {
  SubsystemLayout layout = discordium::make_layout({{"Q", 2}});

  ComplexMatrix clean(2);
  clean(0, 0) = 0.75;
  clean(1, 1) = 0.25;
  clean(0, 1) = cplx(0.1, 0.2);
  clean(1, 0) = cplx(0.1, -0.2);
  DensityOperator rho = discordium::validate(clean, layout);
  REQUIRE(discordium::max_abs_diff(rho.matrix(), clean) == 0.0);

  // A tiny negative eigenvalue inside the positivity tolerance is repaired.
  const double eps = 4e-10;
  ComplexMatrix dusty(2);
  dusty(0, 0) = 1.0 + eps;
  dusty(1, 1) = -eps;
  DensityOperator fixed = discordium::validate(dusty, layout);
  const std::vector<double> spectrum =
      oracle::jacobi_eigenvalues(fixed.matrix());
  REQUIRE(spectrum[1] >= -1e-15);
  REQUIRE(std::abs(spectrum[0] + spectrum[1] - 1.0) < 1e-12);
  REQUIRE(std::abs(fixed.matrix().trace().real() - 1.0) < 1e-12);
}

TEST_CASE("tensor product composes layouts in order") {
  ComplexMatrix a(2);
  a(0, 0) = 0.9;
  a(1, 1) = 0.1;
  ComplexMatrix b(2);
  b(0, 0) = 0.3;
  b(1, 1) = 0.7;
  DensityOperator rho_a =
      discordium::validate(a, discordium::make_layout({{"S", 2}}));
  DensityOperator rho_b =
      discordium::validate(b, discordium::make_layout({{"A", 2}}));

  DensityOperator joint = discordium::tensor_product(rho_a, rho_b);
  REQUIRE(joint.layout().size() == 2);
  REQUIRE(joint.layout().parts()[0].label == "S");
  REQUIRE(joint.layout().parts()[1].label == "A");
  // First factor is most significant: diagonal is (0.27, 0.63, 0.03, 0.07).
  REQUIRE(joint.matrix()(0, 0).real() == Catch::Approx(0.27).margin(1e-15));
  REQUIRE(joint.matrix()(1, 1).real() == Catch::Approx(0.63).margin(1e-15));
  REQUIRE(joint.matrix()(2, 2).real() == Catch::Approx(0.03).margin(1e-15));
  REQUIRE(joint.matrix()(3, 3).real() == Catch::Approx(0.07).margin(1e-15));

  REQUIRE_THROWS_AS(discordium::tensor_product(rho_a, rho_a),
                    discordium::LabelCollision);
}

TEST_CASE("partial trace recovers tensor factors") {
  for (int trial = 0; trial < 8; ++trial) {
    DensityOperator a = discordium::random_density(
        discordium::make_layout({{"S", 2}}), 100 + trial);
    DensityOperator b = discordium::random_density(
        discordium::make_layout({{"A", 3}}), 200 + trial);
    DensityOperator joint = discordium::tensor_product(a, b);

    DensityOperator back_a = discordium::partial_trace(joint, {"S"});
    DensityOperator back_b = discordium::partial_trace(joint, {"A"});
    REQUIRE(discordium::max_abs_diff(back_a.matrix(), a.matrix()) < 1e-12);
    REQUIRE(discordium::max_abs_diff(back_b.matrix(), b.matrix()) < 1e-12);
  }
}

TEST_CASE("partial trace keeps requested parts in original order") {
  DensityOperator tri = discordium::random_density({2, 2, 2}, 7);
  const auto& labels = tri.layout().labels();
  DensityOperator kept =
      discordium::partial_trace(tri, {labels[2], labels[0]});
  REQUIRE(kept.layout().parts()[0].label == labels[0]);
  REQUIRE(kept.layout().parts()[1].label == labels[2]);
  REQUIRE(std::abs(kept.matrix().trace().real() - 1.0) < 1e-12);

  // Tracing in two steps agrees with one step.
  DensityOperator two_step = discordium::partial_trace(
      discordium::partial_trace(tri, {labels[0], labels[2]}), {labels[0]});
  DensityOperator one_step = discordium::partial_trace(tri, {labels[0]});
  REQUIRE(discordium::max_abs_diff(two_step.matrix(), one_step.matrix()) <
          1e-12);

  REQUIRE_THROWS_AS(discordium::partial_trace(tri, {"nope"}),
                    discordium::UnknownLabel);
}

TEST_CASE("eigendecomposition matches an independent solver and rebuilds") {
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t dim = 2 + static_cast<std::size_t>(trial % 3) * 2;
    DensityOperator rho = discordium::random_density(
        discordium::make_layout({{"Q", dim}}), 300 + trial);
    discordium::Spectrum spec = discordium::eigendecompose(rho);

    const std::vector<double> reference =
        oracle::jacobi_eigenvalues(rho.matrix());
    REQUIRE(spec.eigenvalues.size() == reference.size());
    for (std::size_t i = 0; i < reference.size(); ++i)
      REQUIRE(spec.eigenvalues[i] == Catch::Approx(reference[i]).margin(1e-10));

    // Descending order and V diag(lambda) V^dag reconstruction.
    for (std::size_t i = 0; i + 1 < spec.eigenvalues.size(); ++i)
      REQUIRE(spec.eigenvalues[i] >= spec.eigenvalues[i + 1] - 1e-12);
    ComplexMatrix lambda(dim);
    for (std::size_t i = 0; i < dim; ++i) lambda(i, i) = spec.eigenvalues[i];
    ComplexMatrix rebuilt =
        spec.eigenvectors * lambda * spec.eigenvectors.adjoint();
    REQUIRE(discordium::max_abs_diff(rebuilt, rho.matrix()) < 1e-8);
  }
}

TEST_CASE("noise family spectrum is pinned") {
  DensityOperator w = discordium::werner({0.5}, "S", "A");
  const std::vector<double> spectrum = oracle::jacobi_eigenvalues(w.matrix());
  REQUIRE(spectrum[0] == Catch::Approx(0.625).margin(1e-12));
  for (int i = 1; i < 4; ++i)
    REQUIRE(spectrum[i] == Catch::Approx(0.125).margin(1e-12));
  REQUIRE(oracle::shannon(spectrum) ==
          Catch::Approx(oracle::kWernerHalfJointEntropy).margin(1e-12));
}

TEST_CASE("deterministic random states are reproducible and valid") {
  DensityOperator first = discordium::random_density({2, 2}, 42);
  DensityOperator second = discordium::random_density({2, 2}, 42);
  REQUIRE(discordium::max_abs_diff(first.matrix(), second.matrix()) == 0.0);

  DensityOperator other = discordium::random_density({2, 2}, 43);
  REQUIRE(discordium::max_abs_diff(first.matrix(), other.matrix()) > 1e-3);

  for (int seed = 0; seed < 20; ++seed) {
    DensityOperator rho = discordium::random_density({2, 2}, seed);
    REQUIRE(rho.matrix().hermitian_defect() < 1e-12);
    REQUIRE(std::abs(rho.matrix().trace().real() - 1.0) < 1e-12);
    const std::vector<double> spectrum =
        oracle::jacobi_eigenvalues(rho.matrix());
    REQUIRE(spectrum.back() > -1e-12);
  }
}
