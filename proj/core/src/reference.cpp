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

#include "superrad/reference.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace superrad::reference {

namespace {

struct Extremum {
    double value;
    double time;
};

// Golden-section search for the maximum of f on [0, t_max] after a scan with
// spacing `coarse` has bracketed it.
Extremum maximize(const std::function<double(double)>& f, double t_max, double coarse) {
    double best_t = 0.0;
    double best = f(0.0);
    for (double t = coarse; t <= t_max; t += coarse) {
        const double v = f(t);
        if (v > best) {
            best = v;
            best_t = t;
        }
    }
    double lo = std::max(0.0, best_t - coarse);
    double hi = best_t + coarse;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > 1e-10) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    const double t = 0.5 * (lo + hi);
    return {f(t), t};
}

}  // namespace

Point independent_emission(std::size_t n_atoms, double t) {
    if (t < 0.0) throw std::invalid_argument("independent_emission: t must be >= 0");
    return {static_cast<double>(n_atoms) * std::exp(-t), 0.0};
}

bool has_pure_superradiance(std::size_t n_atoms) { return n_atoms >= 3 && n_atoms <= 5; }

Point pure_superradiance(std::size_t n_atoms, double t) {
    if (t < 0.0) throw std::invalid_argument("pure_superradiance: t must be >= 0");
    switch (n_atoms) {
        case 3:
            return {3.0 * (8.0 * std::exp(-4.0 * t) + std::exp(-3.0 * t) * (12.0 * t - 7.0)),
                    3.0 * (6.0 * std::exp(-4.0 * t) + std::exp(-3.0 * t) * (8.0 * t - 6.0))};
        case 4:
            return {std::exp(-6.0 * t) * (72.0 * t + 96.0) +
                        4.0 * std::exp(-4.0 * t) * (36.0 * t - 23.0),
                    12.0 * (std::exp(-6.0 * t) * (4.0 * t + 6.0) +
                            std::exp(-4.0 * t) * (9.0 * t - 6.0))};
        case 5:
            return {5.0 / 3.0 *
                        (16.0 * std::exp(-8.0 * t) * (24.0 * t - 1.0) +
                         std::exp(-5.0 * t) * (240.0 * t - 143.0) + 162.0 * std::exp(-9.0 * t)),
                    20.0 / 3.0 *
                        (5.0 * std::exp(-8.0 * t) * (6.0 * t + 5.0) +
                         std::exp(-5.0 * t) * (48.0 * t - 25.0))};
        default:
            throw std::invalid_argument("pure_superradiance: closed forms exist for N = 3, 4, 5");
    }
}

PulseStats pure_superradiance_maxima(std::size_t n_atoms) {
    if (!has_pure_superradiance(n_atoms)) {
        throw std::invalid_argument("pure_superradiance_maxima: N must be 3, 4 or 5");
    }
    const Extremum i = maximize(
        [n_atoms](double t) { return pure_superradiance(n_atoms, t).intensity; }, 3.0, 1e-3);
    const Extremum c = maximize(
        [n_atoms](double t) { return pure_superradiance(n_atoms, t).coherence; }, 3.0, 1e-3);
    return {i.value, i.time, c.value, c.time, 0.0, 0.0};
}

TimeSeries independent_emission_series(std::size_t n_atoms, const TimeGrid& grid) {
    TimeSeries s{grid, {}, {}, {}, {}};
    for (double t : grid.points()) {
        const Point p = independent_emission(n_atoms, t);
        s.intensity.push_back(p.intensity);
        s.coherence.push_back(p.coherence);
    }
    return s;
}

TimeSeries pure_superradiance_series(std::size_t n_atoms, const TimeGrid& grid) {
    TimeSeries s{grid, {}, {}, {}, {}};
    for (double t : grid.points()) {
        const Point p = pure_superradiance(n_atoms, t);
        s.intensity.push_back(p.intensity);
        s.coherence.push_back(p.coherence);
    }
    return s;
}

}  // namespace superrad::reference
