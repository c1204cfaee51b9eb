// Copyright 2026 The superrad Authors
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

#include <cstddef>

#include "superrad/observables.hpp"

namespace superrad::reference {

struct Point {
    double intensity;
    double coherence;
};

/// N uncorrelated emitters starting fully excited: (N e^-t, 0).
Point independent_emission(std::size_t n_atoms, double t);

/// Closed-form I(t), C(t) for the fully excited state with gamma_ij = 1 and
/// identical shifts. Only N = 3, 4, 5 are available.
Point pure_superradiance(std::size_t n_atoms, double t);

bool has_pure_superradiance(std::size_t n_atoms);

/// Maxima of the closed forms, located by a coarse scan and golden-section
/// refinement to 1e-10 in t. Baselines are zero, so `a_*` are the absolute
/// maxima.
PulseStats pure_superradiance_maxima(std::size_t n_atoms);

/// Both curves sampled on `grid`.
TimeSeries independent_emission_series(std::size_t n_atoms, const TimeGrid& grid);
TimeSeries pure_superradiance_series(std::size_t n_atoms, const TimeGrid& grid);

}  // namespace superrad::reference
