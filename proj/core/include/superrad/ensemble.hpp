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

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "superrad/couplings.hpp"
#include "superrad/geometry.hpp"
#include "superrad/observables.hpp"
#include "superrad/propagator.hpp"
#include "superrad/state.hpp"

namespace superrad {

enum class InitialState { fully_excited, subradiant };

std::string_view to_string(InitialState initial);
std::optional<InitialState> parse_initial_state(std::string_view name);

BlockDensityMatrix make_initial_state(InitialState initial, std::size_t n_atoms);

/// I0 and C0 used as pulse baselines: (N, 0) for the fully excited state and
/// (1, 1) for the subradiant state.
std::pair<double, double> pulse_baselines(InitialState initial, std::size_t n_atoms);

/// Monte Carlo average over random configurations at fixed k0R.
struct EnsembleSpec {
    std::size_t n_atoms = 3;
    double k0R = 0.466;
    std::size_t n_samples = 5000;
    std::uint64_t base_seed = 1;
    Regime regime = Regime::exact;
    double f0 = 0.0;
    InitialState initial = InitialState::fully_excited;
    TimeGrid grid = TimeGrid::superradiance_default();
    SamplingOptions sampling{};

    /// Throws std::invalid_argument on inconsistent parameters.
    void validate() const;
};

struct ExecutionOptions {
    /// 0 selects std::thread::hardware_concurrency().
    std::size_t workers = 0;
    /// Realizations per reduction unit. Fixed independently of `workers` so
    /// the reduction order never depends on the degree of parallelism.
    std::size_t chunk_size = 16;
};

/// Seed of realization k.
std::uint64_t realization_seed(std::uint64_t base_seed, std::size_t k);

/// Couplings of realization k.
CouplingSet realization_couplings(const EnsembleSpec& spec, std::size_t k);

/// I(t), C(t) of realization k alone.
TimeSeries run_realization(const EnsembleSpec& spec, std::size_t k);

/// Pointwise mean and standard error over `spec.n_samples` realizations.
TimeSeries run_ensemble(const EnsembleSpec& spec, const ExecutionOptions& exec = {});

struct SweepRow {
    double k0R = 0.0;
    double a_intensity = 0.0;
    double t_intensity = 0.0;
    double a_coherence = 0.0;
    double t_coherence = 0.0;
    std::size_t n_samples = 0;
    double a_intensity_stderr = 0.0;
    double a_coherence_stderr = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;  ///< sorted by k0R
};

struct SweepOptions {
    /// When positive, the time grid used at k0R < this value is compressed by
    /// (k0R / value)^3 to follow the shortening of the pulse at small k0R.
    double grid_scaling_k0R = 0.0;
};

/// Scales every point of `grid` by `factor` > 0.
TimeGrid scale_grid(const TimeGrid& grid, double factor);

/// run_ensemble then pulse_stats (average first, extract second) per k0R.
SweepResult sweep(const EnsembleSpec& base, std::vector<double> k0R_values,
                  const ExecutionOptions& exec = {}, const SweepOptions& options = {});

/// Pulse statistics of one averaged series with the baselines of `initial`.
SweepRow summarize(const TimeSeries& averaged, double k0R, std::size_t n_samples,
                   InitialState initial, std::size_t n_atoms);

struct PowerLaw {
    double exponent;
    double prefactor;  ///< carries the common sign of the fitted values
};

/// Least-squares line through (log x, log |y|) for the points with x in
/// [lo, hi]. Requires at least three such points, all of one sign.
PowerLaw fit_power_law(const std::vector<std::pair<double, double>>& points, double lo,
                       double hi);

/// Default k0R progression, ratio ~1.397 around 0.466 ... 2.470.
std::vector<double> default_k0R_grid(double lo, double hi);

}  // namespace superrad
