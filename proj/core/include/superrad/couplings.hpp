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

#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "superrad/geometry.hpp"

namespace superrad {

/// Which coefficients enter the master equation.
enum class Regime {
    exact,              ///< full retarded dipole-dipole coefficients
    distant,            ///< gamma = identity, f = 0 (independent emitters)
    close,              ///< gamma = 1 everywhere, static 1/xi^3 shifts
    pure_superradiant,  ///< gamma = 1 everywhere, identical shifts f0
};

std::string_view to_string(Regime regime);
std::optional<Regime> parse_regime(std::string_view name);

/// Below this separation the exact coefficients switch to their Taylor series.
inline constexpr double kSeriesSwitchXi = 1e-2;

/// Collective decay rate gamma_ij in units of the single-atom rate.
double gamma_exact(const PairGeometry& geom);

/// Coherent dipole-dipole shift f_ij in units of the single-atom rate.
double f_exact(const PairGeometry& geom);

/// Static near-field shift (3/4)(1 - 3 cos^2 alpha) / xi^3.
double f_close(const PairGeometry& geom);

/**
 * Coupling matrices for one configuration. `gamma` is real symmetric with unit
 * diagonal and positive semidefinite for physical geometries; `f` is real
 * symmetric with zero diagonal.
 */
struct CouplingSet {
    Eigen::MatrixXd gamma;
    Eigen::MatrixXd f;
    Regime regime = Regime::exact;

    Eigen::Index size() const { return gamma.rows(); }
};

CouplingSet build_couplings(const AtomConfiguration& config, Regime regime,
                            double f0 = 0.0);

/// Couplings of `n_atoms` atoms that do not depend on positions (distant and
/// pure_superradiant regimes).
CouplingSet uniform_couplings(std::size_t n_atoms, Regime regime, double f0 = 0.0);

}  // namespace superrad
