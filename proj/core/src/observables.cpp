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

#include "superrad/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "superrad/liouvillian.hpp"
#include "superrad/sector_operators.hpp"

namespace superrad {

double intensity(const BlockDensityMatrix& rho, const CouplingSet& couplings) {
    if (static_cast<std::size_t>(couplings.size()) != rho.n_atoms()) {
        throw std::invalid_argument("intensity: coupling and state sizes differ");
    }
    const SectorBasis basis(rho.n_atoms());
    const SectorOperators ops = build_sector_operators(basis, couplings);
    Complex total = 0.0;
    for (std::size_t n = 0; n < rho.n_blocks(); ++n) {
        total += (ops.decay[n].cast<Complex>() * rho.block(n)).trace();
    }
    return total.real();
}

double coherence_l1(const BlockDensityMatrix& rho) {
    double sum = 0.0;
    for (std::size_t n = 0; n < rho.n_blocks(); ++n) {
        const auto& b = rho.block(n);
        sum += b.cwiseAbs().sum() - b.diagonal().cwiseAbs().sum();
    }
    return sum;
}

double coherence_l1_dense(const Eigen::MatrixXcd& rho) {
    return rho.cwiseAbs().sum() - rho.diagonal().cwiseAbs().sum();
}

std::vector<double> intensity_series(const std::vector<BlockDensityMatrix>& states,
                                     const CouplingSet& couplings) {
    std::vector<double> out;
    out.reserve(states.size());
    if (states.empty()) return out;
    const SectorBasis basis(states.front().n_atoms());
    const SectorOperators ops = build_sector_operators(basis, couplings);
    for (const auto& rho : states) {
        Complex total = 0.0;
        for (std::size_t n = 0; n < rho.n_blocks(); ++n) {
            total += (ops.decay[n].cast<Complex>() * rho.block(n)).trace();
        }
        out.push_back(total.real());
    }
    return out;
}

std::vector<double> coherence_series(const std::vector<BlockDensityMatrix>& states) {
    std::vector<double> out;
    out.reserve(states.size());
    for (const auto& rho : states) out.push_back(coherence_l1(rho));
    return out;
}

TimeSeries observe(const std::vector<BlockDensityMatrix>& states, const CouplingSet& couplings,
                   const TimeGrid& grid) {
    if (states.size() != grid.size()) {
        throw std::invalid_argument("observe: number of states differs from grid size");
    }
    return {grid, intensity_series(states, couplings), coherence_series(states), {}, {}};
}

std::vector<double> finite_difference_intensity(const std::vector<BlockDensityMatrix>& states,
                                                const TimeGrid& grid) {
    const std::size_t n = states.size();
    if (n != grid.size() || n < 3) {
        throw std::invalid_argument("finite_difference_intensity: need >= 3 states on the grid");
    }
    std::vector<double> e(n);
    for (std::size_t k = 0; k < n; ++k) e[k] = states[k].mean_excitation();
    const auto& t = grid.points();

    // Second-order three-point derivative on a non-uniform stencil.
    auto derivative = [&](std::size_t i0, std::size_t i1, std::size_t i2, double at) {
        const double t0 = t[i0], t1 = t[i1], t2 = t[i2];
        const double w0 = (2.0 * at - t1 - t2) / ((t0 - t1) * (t0 - t2));
        const double w1 = (2.0 * at - t0 - t2) / ((t1 - t0) * (t1 - t2));
        const double w2 = (2.0 * at - t0 - t1) / ((t2 - t0) * (t2 - t1));
        return w0 * e[i0] + w1 * e[i1] + w2 * e[i2];
    };

    std::vector<double> out(n);
    out[0] = -derivative(0, 1, 2, t[0]);
    for (std::size_t k = 1; k + 1 < n; ++k) out[k] = -derivative(k - 1, k, k + 1, t[k]);
    out[n - 1] = -derivative(n - 3, n - 2, n - 1, t[n - 1]);
    return out;
}

ObservableEvaluator::ObservableEvaluator(const HermitianCoordinates& coords,
                                         const CouplingSet& couplings)
    : coords_(coords) {
    const SectorBasis basis(coords.n_atoms());
    const SectorOperators ops = build_sector_operators(basis, couplings);
    weights_ = coords.linear_functional(ops.decay);
}

TimeSeries simulate(const CouplingSet& couplings, const BlockDensityMatrix& initial,
                    const TimeGrid& grid) {
    const LiouvillianMatrix generator = assemble(couplings, initial.n_atoms());
    const int top = std::max(initial.highest_occupied_sector(), 0);
    const Propagator prop(generator, static_cast<std::size_t>(top));
    const ObservableEvaluator eval(prop.coordinates(), couplings);

    TimeSeries series{grid, std::vector<double>(grid.size()), std::vector<double>(grid.size()),
                      {}, {}};
    prop.propagate(prop.coordinates().encode(initial), grid,
                   [&](std::size_t k, double, const Eigen::Ref<const Eigen::VectorXd>& x) {
                       series.intensity[k] = eval.intensity(x);
                       series.coherence[k] = eval.coherence(x);
                   });
    return series;
}

RefinedMaximum refined_maximum(std::span<const double> times, std::span<const double> values) {
    if (values.empty() || times.size() != values.size()) {
        throw std::invalid_argument("refined_maximum: empty or mismatched series");
    }
    const std::size_t k = static_cast<std::size_t>(
        std::max_element(values.begin(), values.end()) - values.begin());
    if (k == 0 || k + 1 == values.size()) return {values[k], times[k]};

    const double t0 = times[k - 1], t1 = times[k], t2 = times[k + 1];
    const double y0 = values[k - 1], y1 = values[k], y2 = values[k + 1];
    const double d1 = (y1 - y0) / (t1 - t0);
    const double d2 = (y2 - y1) / (t2 - t1);
    const double curvature = (d2 - d1) / (t2 - t0);
    if (!(curvature < 0.0)) return {y1, t1};

    const double t_star = std::clamp(0.5 * (t0 + t1) - d1 / (2.0 * curvature), t0, t2);
    const double y_star = y0 + d1 * (t_star - t0) + curvature * (t_star - t0) * (t_star - t1);
    return {std::max(y_star, y1), y_star >= y1 ? t_star : t1};
}

PulseStats pulse_stats(const TimeSeries& series, double baseline_i0, double baseline_c0) {
    if (series.intensity.empty() || series.coherence.empty()) {
        throw std::invalid_argument("pulse_stats: empty series");
    }
    const auto& t = series.grid.points();
    const RefinedMaximum i_max = refined_maximum(t, series.intensity);
    const RefinedMaximum c_max = refined_maximum(t, series.coherence);
    return {i_max.value - baseline_i0, i_max.time, c_max.value - baseline_c0, c_max.time,
            baseline_i0, baseline_c0};
}

double cooperativity(std::size_t n_atoms, double sphere_radius_xi) {
    if (!(sphere_radius_xi > 0.0)) {
        throw std::invalid_argument("cooperativity: radius must be positive");
    }
    const double volume = 4.0 * std::numbers::pi * std::pow(sphere_radius_xi, 3) / 3.0;
    const double lambda = 2.0 * std::numbers::pi;
    const double density = static_cast<double>(n_atoms) / volume;
    return density * lambda * lambda * lambda / (4.0 * std::numbers::pi * std::numbers::pi);
}

}  // namespace superrad
