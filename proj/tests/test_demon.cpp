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

#include "discordium/demon.hpp"
#include "discordium/states.hpp"
#include "oracles.hpp"

using discordium::DensityOperator;
using discordium::MeasurementBasis;
using discordium::WorkLedger;

TEST_CASE("extraction credit after a sharp record") {
  DensityOperator bell = discordium::bell("S", "A");
  // Any record on one half of the entangled pair leaves the other half pure.
  for (int i = 0; i < 4; ++i) {
    MeasurementBasis b = discordium::random_basis(2, 10 + i, "A");
    REQUIRE(discordium::work_gain(bell, b) == Catch::Approx(1.0).margin(1e-9));
  }

  // Uncorrelated maximal mixture: the record reveals nothing.
  DensityOperator flat = discordium::werner({0.0}, "S", "A");
  REQUIRE(discordium::work_gain(flat, discordium::computational_basis("A", 2)) ==
          Catch::Approx(0.0).margin(1e-12));

  // Misaligned record on the classically correlated mixture is worthless.
  DensityOperator cc = discordium::classical_mixture("S", "A");
  REQUIRE(discordium::work_gain(cc, discordium::hadamard_basis("A")) ==
          Catch::Approx(0.0).margin(1e-9));
  REQUIRE(discordium::work_gain(cc, discordium::computational_basis("A", 2)) ==
          Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("reset cost equals the record entropy") {
  DensityOperator bell = discordium::bell("S", "A");
  REQUIRE(discordium::erasure_cost(bell,
                                   discordium::computational_basis("A", 2)) ==
          Catch::Approx(1.0).margin(1e-12));

  discordium::ComplexMatrix m(4);
  m(0, 0) = 0.75;
  m(1, 1) = 0.25;
  DensityOperator skewed = discordium::validate(
      m, discordium::make_layout({{"S", 2}, {"A", 2}}));
  REQUIRE(discordium::erasure_cost(skewed,
                                   discordium::computational_basis("A", 2)) ==
          Catch::Approx(oracle::kBinaryEntropyQuarter).margin(1e-12));

  // kT scales linearly.
  REQUIRE(discordium::erasure_cost(bell, discordium::computational_basis("A", 2),
                                   3.5) == Catch::Approx(3.5).margin(1e-12));
}

TEST_CASE("net local work equals capacity minus record-averaged entropy") {
  for (int i = 0; i < 10; ++i) {
    DensityOperator rho = discordium::random_density({2, 2}, 100 + i);
    MeasurementBasis b = discordium::random_basis(2, 200 + i, "A");
    const double direct = discordium::net_work_classical(rho, b);
    const double expected =
        2.0 - discordium::accessible_joint_entropy(rho, b);
    REQUIRE(direct == Catch::Approx(expected).margin(1e-10));
  }
}

TEST_CASE("nonlocal work values are pinned") {
  REQUIRE(discordium::net_work_quantum(discordium::bell("S", "A")) ==
          Catch::Approx(2.0).margin(1e-9));
  REQUIRE(discordium::net_work_quantum(discordium::werner({0.0}, "S", "A")) ==
          Catch::Approx(0.0).margin(1e-12));
  REQUIRE(discordium::net_work_quantum(discordium::werner({0.5}, "S", "A")) ==
          Catch::Approx(2.0 - oracle::kWernerHalfJointEntropy).margin(1e-10));
  REQUIRE(discordium::net_work_quantum(discordium::bell("S", "A"), 2.0) ==
          Catch::Approx(4.0).margin(1e-9));
}

TEST_CASE("local observer never beats the nonlocal one") {
  for (int i = 0; i < 10; ++i) {
    DensityOperator rho = discordium::random_density({2, 2}, 300 + i);
    for (int j = 0; j < 5; ++j) {
      MeasurementBasis b = discordium::random_basis(2, 400 + 10 * i + j, "A");
      REQUIRE(discordium::net_work_quantum(rho) >=
              discordium::net_work_classical(rho, b) - 1e-9);
    }
  }
}

TEST_CASE("deficit bound on the reference states") {
  REQUIRE(discordium::deficit_lower_bound(discordium::bell("S", "A")) ==
          Catch::Approx(1.0).margin(1e-9));
  REQUIRE(discordium::deficit_lower_bound(
              discordium::classical_mixture("S", "A")) ==
          Catch::Approx(0.0).margin(1e-12));
  // Product of maximal mixtures: bound is negative and stays unclamped.
  REQUIRE(discordium::deficit_lower_bound(discordium::werner({0.0}, "S", "A")) ==
          Catch::Approx(-1.0).margin(1e-12));
  REQUIRE(discordium::deficit_lower_bound(discordium::werner({0.5}, "S", "A")) ==
          Catch::Approx(1.0 - oracle::kWernerHalfJointEntropy).margin(1e-10));

  DensityOperator tri = discordium::random_density({2, 2, 2}, 7);
  REQUIRE_THROWS_AS(discordium::deficit_lower_bound(tri),
                    discordium::NotBipartite);
}

TEST_CASE("ledger on the reference states") {
  WorkLedger bell = discordium::compute_ledger(discordium::bell("S", "A"));
  REQUIRE(bell.w_quantum == Catch::Approx(2.0).margin(1e-9));
  REQUIRE(bell.w_classical == Catch::Approx(1.0).margin(1e-9));
  REQUIRE(bell.advantage == Catch::Approx(1.0).margin(1e-9));
  REQUIRE(bell.w_plus == Catch::Approx(1.0).margin(1e-9));
  REQUIRE(bell.w_minus == Catch::Approx(1.0).margin(1e-9));
  REQUIRE(bell.deficit_lower_bound == Catch::Approx(1.0).margin(1e-9));

  WorkLedger cc =
      discordium::compute_ledger(discordium::classical_mixture("S", "A"));
  REQUIRE(cc.advantage == Catch::Approx(0.0).margin(1e-8));
  REQUIRE(cc.w_classical == Catch::Approx(1.0).margin(1e-8));
  REQUIRE(cc.w_quantum == Catch::Approx(1.0).margin(1e-12));

  WorkLedger w = discordium::compute_ledger(discordium::werner({0.5}, "S", "A"));
  REQUIRE(w.w_quantum ==
          Catch::Approx(2.0 - oracle::kWernerHalfJointEntropy).margin(1e-10));
  REQUIRE(w.advantage ==
          Catch::Approx(oracle::kWernerHalfLeastDiscord).margin(1e-8));
}

TEST_CASE("ledger advantage equals the scaled basis-sweep floor") {
  for (int i = 0; i < 8; ++i) {
    DensityOperator rho = discordium::random_density({2, 2}, 500 + i);
    const double kT = 0.5 + 0.25 * i;
    WorkLedger ledger = discordium::compute_ledger(rho, kT);
    const double floor = discordium::least_discord(rho, "A").minimum;
    REQUIRE(ledger.advantage == Catch::Approx(kT * floor).margin(1e-8));
    REQUIRE(ledger.advantage >= -1e-9);
    if (ledger.deficit_lower_bound >= 0.0) {
      REQUIRE(ledger.advantage >= ledger.deficit_lower_bound - 1e-6);
    }
  }
}

TEST_CASE("ledger respects the measured-side override") {
  discordium::ComplexMatrix m(4);
  m(0, 0) = 0.5;
  for (std::size_t r = 2; r < 4; ++r)
    for (std::size_t c = 2; c < 4; ++c) m(r, c) = 0.25;
  DensityOperator rho = discordium::validate(
      m, discordium::make_layout({{"S", 2}, {"A", 2}}));

  WorkLedger via_a = discordium::compute_ledger(rho);
  WorkLedger via_s = discordium::compute_ledger(rho, 1.0, {}, "S");
  REQUIRE(via_s.basis_used.target == "S");
  REQUIRE(via_a.basis_used.target == "A");
  // Measuring the side that records the branch is strictly better here.
  REQUIRE(via_s.w_classical > via_a.w_classical + 0.01);
  REQUIRE(via_s.advantage == Catch::Approx(0.0).margin(1e-8));
}
