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

// Umbrella header: the whole toolkit except the JSON/CLI layers.

#pragma once

#include "discordium/basis.hpp"
#include "discordium/basis_params.hpp"
#include "discordium/circuit.hpp"
#include "discordium/complex_matrix.hpp"
#include "discordium/demon.hpp"
#include "discordium/density.hpp"
#include "discordium/errors.hpp"
#include "discordium/info.hpp"
#include "discordium/layout.hpp"
#include "discordium/locc.hpp"
#include "discordium/optimize.hpp"
#include "discordium/rng.hpp"
#include "discordium/spectrum.hpp"
#include "discordium/states.hpp"
#include "discordium/tolerances.hpp"
