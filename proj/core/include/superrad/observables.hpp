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

#include <span>
#include <vector>

#include <Eigen/Core>

#include "superrad/couplings.hpp"
#include "superrad/propagator.hpp"
#include "superrad/state.hpp"

namespace superrad {

/// Radiated intensity I(t) and l1 coherence C(t) sampled on a grid. The
/// stderr vectors are empty unless the series is an ensemble average.
struct TimeSeries {
    TimeGrid grid;
    std::vector<double> intensity;
    std::vector<double> coherence;
    std::vector<double> intensity_stderr;
    std::vector<double> coherence_stderr;

    std::size_t size() const { return grid.size(); }
    bool has_stderr() const { return !intensity_stderr.empty(); }
};

/// Height and position of the maxima of I and C relative to baselines.
struct PulseStats {
    double a_intensity = 0.0;
    double t_intensity = 0.0;
    double a_coherence = 0.0;
    double t_coherence = 0.0;
    double baseline_i0 = 0.0;
    double baseline_c0 = 0.0;
};

/// sum_ij gamma_ij <s+_i s-_j>, the photon emission rate in units of gamma_0.
double intensity(const BlockDensityMatrix& rho, const CouplingSet& couplings);

/// Sum of the moduli of all off-diagonal product-basis entries.
double coherence_l1(const BlockDensityMatrix& rho);

/// Same as coherence_l1 but on a full 2^N x 2^N matrix.
double coherence_l1_dense(const Eigen::MatrixXcd& rho);

std::vector<double> intensity_series(const std::vector<BlockDensityMatrix>& states,
                                     const CouplingSet& couplings);
std::vector<double> coherence_series(const std::vector<BlockDensityMatrix>& states);

/// Builds the full TimeSeries from evolved states.
TimeSeries observe(const std::vector<BlockDensityMatrix>& states, const CouplingSet& couplings,
                   const TimeGrid& grid);

/// -d/dt <sum_i s^z_i / 2> by second-order finite differences on the grid.
/// Equal to the intensity up to O(dt^2); kept as an independent cross-check.
std::vector<double> finite_difference_intensity(const std::vector<BlockDensityMatrix>& states,
                                                const TimeGrid& grid);

/**
 * Evaluates I and C directly on real Hermitian coordinates, without building
 * block matrices. Used on the hot path of ensemble runs.
 */
class ObservableEvaluator {
  public:
    ObservableEvaluator(const HermitianCoordinates& coords, const CouplingSet& couplings);

    double intensity(const Eigen::Ref<const Eigen::VectorXd>& x) const {
        return weights_.dot(x);
    }
    double coherence(const Eigen::Ref<const Eigen::VectorXd>& x) const {
        return coords_.coherence_l1(x);
    }

  private:
    HermitianCoordinates coords_;
    Eigen::VectorXd weights_;
};

/// Propagates `initial` and returns I(t), C(t) on the grid.
TimeSeries simulate(const CouplingSet& couplings, const BlockDensityMatrix& initial,
                    const TimeGrid& grid);

/**
 * Maximum of `values` over the grid, refined by a parabola through the largest
 * sample and its two neighbours. Returns {value, time}; a maximum at the first
 * or last sample is returned unrefined.
 */
struct RefinedMaximum {
    double value;
    double time;
};
RefinedMaximum refined_maximum(std::span<const double> times, std::span<const double> values);

/// A = max - baseline and the argmax, for both I and C.
PulseStats pulse_stats(const TimeSeries& series, double baseline_i0, double baseline_c0);

/// rho lambda^3 / (4 pi^2) for n_atoms in a ball of radius `sphere_radius_xi`
/// (in units of 1/k0, so lambda = 2 pi).
double cooperativity(std::size_t n_atoms, double sphere_radius_xi);

}  // namespace superrad
