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

#include <stdexcept>
#include <string>
#include <utility>

namespace discordium {

// Base class for every error thrown by this library. code() is a stable,
// machine-readable identifier; the CLI serializes it into error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define DISCORDIUM_ERROR(NAME)                                        \
  class NAME : public Error {                                         \
   public:                                                            \
    explicit NAME(const std::string& what) : Error(#NAME, what) {}    \
  }

// Matrix / layout structure.
DISCORDIUM_ERROR(ShapeMismatch);
DISCORDIUM_ERROR(InvalidLayout);
DISCORDIUM_ERROR(LabelCollision);
DISCORDIUM_ERROR(UnknownLabel);
DISCORDIUM_ERROR(NotBipartite);

// Density-operator admissibility.
DISCORDIUM_ERROR(NotHermitian);
DISCORDIUM_ERROR(NotUnitTrace);
DISCORDIUM_ERROR(NotPositive);

// Bases and parameterizations.
DISCORDIUM_ERROR(NotOrthonormal);
DISCORDIUM_ERROR(BadParamCount);
DISCORDIUM_ERROR(BadParameter);

// State construction.
DISCORDIUM_ERROR(BadRange);
DISCORDIUM_ERROR(BadProbabilities);
DISCORDIUM_ERROR(NonOrthogonalBranches);
DISCORDIUM_ERROR(NotNormalized);

// Circuits and protocols.
DISCORDIUM_ERROR(SelfControl);
DISCORDIUM_ERROR(DuplicateSide);
DISCORDIUM_ERROR(NoConvergence);

// Serialization.
DISCORDIUM_ERROR(ParseError);

#undef DISCORDIUM_ERROR

}  // namespace discordium
