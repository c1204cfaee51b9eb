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

#include "superrad/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "superrad/liouvillian.hpp"
#include "superrad/random.hpp"

namespace superrad {

namespace {

// Running mean and sum of squared deviations of I and C at every grid point.
struct Moments {
    std::size_t count = 0;
    std::vector<double> mean_i, m2_i, mean_c, m2_c;

    explicit Moments(std::size_t n_points = 0)
        : mean_i(n_points), m2_i(n_points), mean_c(n_points), m2_c(n_points) {}

    void add(const std::vector<double>& intensity, const std::vector<double>& coherence) {
        ++count;
        const double inv = 1.0 / static_cast<double>(count);
        for (std::size_t k = 0; k < mean_i.size(); ++k) {
            const double di = intensity[k] - mean_i[k];
            mean_i[k] += di * inv;
            m2_i[k] += di * (intensity[k] - mean_i[k]);
            const double dc = coherence[k] - mean_c[k];
            mean_c[k] += dc * inv;
            m2_c[k] += dc * (coherence[k] - mean_c[k]);
        }
    }

    // Pairwise update of Chan, Golub & LeVeque.
    static Moments combine(const Moments& a, const Moments& b) {
        if (a.count == 0) return b;
        if (b.count == 0) return a;
        Moments out(a.mean_i.size());
        out.count = a.count + b.count;
        const double na = static_cast<double>(a.count);
        const double nb = static_cast<double>(b.count);
        const double n = na + nb;
        for (std::size_t k = 0; k < a.mean_i.size(); ++k) {
            const double di = b.mean_i[k] - a.mean_i[k];
            out.mean_i[k] = a.mean_i[k] + di * nb / n;
            out.m2_i[k] = a.m2_i[k] + b.m2_i[k] + di * di * na * nb / n;
            const double dc = b.mean_c[k] - a.mean_c[k];
            out.mean_c[k] = a.mean_c[k] + dc * nb / n;
            out.m2_c[k] = a.m2_c[k] + b.m2_c[k] + dc * dc * na * nb / n;
        }
        return out;
    }
};

bool depends_on_positions(Regime regime) {
    return regime == Regime::exact || regime == Regime::close;
}

// Everything about a realization that does not depend on its couplings.
struct RealizationContext {
    BlockDensityMatrix initial;
    std::size_t top_sector;
};

RealizationContext make_context(const EnsembleSpec& spec) {
    BlockDensityMatrix initial = make_initial_state(spec.initial, spec.n_atoms);
    const auto top = static_cast<std::size_t>(std::max(initial.highest_occupied_sector(), 0));
    return {std::move(initial), top};
}

void simulate_into(const EnsembleSpec& spec, const RealizationContext& ctx, std::size_t k,
                   std::vector<double>& intensity, std::vector<double>& coherence) {
    const CouplingSet couplings = realization_couplings(spec, k);
    const LiouvillianMatrix generator = assemble(couplings, spec.n_atoms);
    const Propagator prop(generator, ctx.top_sector);
    const ObservableEvaluator eval(prop.coordinates(), couplings);
    prop.propagate(prop.coordinates().encode(ctx.initial), spec.grid,
                   [&](std::size_t i, double, const Eigen::Ref<const Eigen::VectorXd>& x) {
                       intensity[i] = eval.intensity(x);
                       coherence[i] = eval.coherence(x);
                   });
}

}  // namespace

std::string_view to_string(InitialState initial) {
    switch (initial) {
        case InitialState::fully_excited: return "fully_excited";
        case InitialState::subradiant: return "subradiant";
    }
    return "unknown";
}

std::optional<InitialState> parse_initial_state(std::string_view name) {
    if (name == "fully_excited" || name == "excited") return InitialState::fully_excited;
    if (name == "subradiant") return InitialState::subradiant;
    return std::nullopt;
}

BlockDensityMatrix make_initial_state(InitialState initial, std::size_t n_atoms) {
    switch (initial) {
        case InitialState::fully_excited: return fully_excited_state(n_atoms);
        case InitialState::subradiant: return subradiant_state(n_atoms);
    }
    throw std::invalid_argument("make_initial_state: unknown initial state");
}

std::pair<double, double> pulse_baselines(InitialState initial, std::size_t n_atoms) {
    if (initial == InitialState::subradiant) return {1.0, 1.0};
    return {static_cast<double>(n_atoms), 0.0};
}

void EnsembleSpec::validate() const {
    if (n_atoms < 2 || n_atoms > kMaxAtoms) {
        throw std::invalid_argument("EnsembleSpec: n_atoms must be in [2, 12]");
    }
    if (n_samples < 1) throw std::invalid_argument("EnsembleSpec: n_samples must be >= 1");
    if (initial == InitialState::subradiant && n_atoms != 3) {
        throw std::invalid_argument("EnsembleSpec: the subradiant state requires n_atoms = 3");
    }
    if (depends_on_positions(regime) && !(k0R > sampling.xi_min)) {
        throw std::invalid_argument("EnsembleSpec: k0R must exceed xi_min");
    }
    if (!(k0R > 0.0)) throw std::invalid_argument("EnsembleSpec: k0R must be positive");
}

std::uint64_t realization_seed(std::uint64_t base_seed, std::size_t k) {
    return derive_seed(base_seed, static_cast<std::uint64_t>(k));
}

CouplingSet realization_couplings(const EnsembleSpec& spec, std::size_t k) {
    if (!depends_on_positions(spec.regime)) {
        return uniform_couplings(spec.n_atoms, spec.regime, spec.f0);
    }
    const AtomConfiguration config = sample_configuration(
        spec.n_atoms, spec.k0R, realization_seed(spec.base_seed, k), spec.sampling);
    return build_couplings(config, spec.regime, spec.f0);
}

TimeSeries run_realization(const EnsembleSpec& spec, std::size_t k) {
    spec.validate();
    const RealizationContext ctx = make_context(spec);
    TimeSeries out{spec.grid, std::vector<double>(spec.grid.size()),
                   std::vector<double>(spec.grid.size()), {}, {}};
    simulate_into(spec, ctx, k, out.intensity, out.coherence);
    return out;
}

TimeSeries run_ensemble(const EnsembleSpec& spec, const ExecutionOptions& exec) {
    spec.validate();
    const RealizationContext ctx = make_context(spec);
    const std::size_t n_points = spec.grid.size();
    const std::size_t chunk = std::max<std::size_t>(exec.chunk_size, 1);
    const std::size_t n_chunks = (spec.n_samples + chunk - 1) / chunk;

    std::size_t workers = exec.workers;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, n_chunks);

    std::vector<Moments> partial(n_chunks);
    std::atomic<std::size_t> next_chunk{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto work = [&]() {
        std::vector<double> intensity(n_points);
        std::vector<double> coherence(n_points);
        for (;;) {
            const std::size_t c = next_chunk.fetch_add(1);
            if (c >= n_chunks || failed.load()) return;
            try {
                Moments m(n_points);
                const std::size_t end = std::min(spec.n_samples, (c + 1) * chunk);
                for (std::size_t k = c * chunk; k < end; ++k) {
                    simulate_into(spec, ctx, k, intensity, coherence);
                    m.add(intensity, coherence);
                }
                partial[c] = std::move(m);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    // Fixed-shape pairwise tree over chunks in index order.
    while (partial.size() > 1) {
        std::vector<Moments> next;
        next.reserve((partial.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < partial.size(); i += 2) {
            next.push_back(Moments::combine(partial[i], partial[i + 1]));
        }
        if (partial.size() % 2) next.push_back(std::move(partial.back()));
        partial = std::move(next);
    }
    const Moments& total = partial.front();

    TimeSeries out{spec.grid, total.mean_i, total.mean_c, std::vector<double>(n_points, 0.0),
                   std::vector<double>(n_points, 0.0)};
    if (total.count > 1) {
        const double n = static_cast<double>(total.count);
        for (std::size_t k = 0; k < n_points; ++k) {
            out.intensity_stderr[k] = std::sqrt(std::max(0.0, total.m2_i[k]) / (n - 1.0) / n);
            out.coherence_stderr[k] = std::sqrt(std::max(0.0, total.m2_c[k]) / (n - 1.0) / n);
        }
    }
    return out;
}

TimeGrid scale_grid(const TimeGrid& grid, double factor) {
    if (!(factor > 0.0)) throw std::invalid_argument("scale_grid: factor must be positive");
    if (factor == 1.0) return grid;
    if (grid.spacing() == TimeGrid::Spacing::uniform &&
        grid.uniform_count() == grid.size()) {
        return TimeGrid::uniform(grid.back() * factor, grid.size());
    }
    std::vector<double> pts = grid.points();
    for (auto& t : pts) t *= factor;
    return TimeGrid::from_points(std::move(pts));
}

SweepRow summarize(const TimeSeries& averaged, double k0R, std::size_t n_samples,
                   InitialState initial, std::size_t n_atoms) {
    const auto [i0, c0] = pulse_baselines(initial, n_atoms);
    const PulseStats stats = pulse_stats(averaged, i0, c0);

    auto stderr_at = [&](const std::vector<double>& err, double t) {
        if (err.empty()) return 0.0;
        const auto& pts = averaged.grid.points();
        const auto it = std::lower_bound(pts.begin(), pts.end(), t);
        std::size_t k = static_cast<std::size_t>(it - pts.begin());
        if (k == pts.size()) --k;
        if (k > 0 && t - pts[k - 1] < pts[k] - t) --k;
        return err[k];
    };

    return {k0R,
            stats.a_intensity,
            stats.t_intensity,
            stats.a_coherence,
            stats.t_coherence,
            n_samples,
            stderr_at(averaged.intensity_stderr, stats.t_intensity),
            stderr_at(averaged.coherence_stderr, stats.t_coherence)};
}

SweepResult sweep(const EnsembleSpec& base, std::vector<double> k0R_values,
                  const ExecutionOptions& exec, const SweepOptions& options) {
    if (k0R_values.empty()) throw std::invalid_argument("sweep: empty list of k0R values");
    std::sort(k0R_values.begin(), k0R_values.end());
    SweepResult result;
    for (double k0R : k0R_values) {
        EnsembleSpec spec = base;
        spec.k0R = k0R;
        if (options.grid_scaling_k0R > 0.0 && k0R < options.grid_scaling_k0R) {
            spec.grid = scale_grid(base.grid, std::pow(k0R / options.grid_scaling_k0R, 3));
        }
        const TimeSeries averaged = run_ensemble(spec, exec);
        result.rows.push_back(summarize(averaged, k0R, spec.n_samples, spec.initial, spec.n_atoms));
    }
    return result;
}

PowerLaw fit_power_law(const std::vector<std::pair<double, double>>& points, double lo,
                       double hi) {
    std::vector<std::pair<double, double>> logs;
    int sign = 0;
    for (const auto& [x, y] : points) {
        if (x < lo || x > hi) continue;
        const int s = (y > 0.0) - (y < 0.0);
        if (s == 0 || (sign != 0 && s != sign) || !(x > 0.0)) {
            throw std::invalid_argument("fit_power_law: values must be nonzero and of one sign");
        }
        sign = s;
        logs.emplace_back(std::log(x), std::log(std::abs(y)));
    }
    if (logs.size() < 3) {
        throw std::invalid_argument("fit_power_law: need at least three points in the window");
    }
    double mx = 0.0, my = 0.0;
    for (const auto& [lx, ly] : logs) {
        mx += lx;
        my += ly;
    }
    mx /= static_cast<double>(logs.size());
    my /= static_cast<double>(logs.size());
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [lx, ly] : logs) {
        sxx += (lx - mx) * (lx - mx);
        sxy += (lx - mx) * (ly - my);
    }
    if (!(sxx > 0.0)) throw std::invalid_argument("fit_power_law: degenerate abscissae");
    const double slope = sxy / sxx;
    return {slope, sign * std::exp(my - slope * mx)};
}

std::vector<double> default_k0R_grid(double lo, double hi) {
    constexpr double anchor = 0.466;
    const double ratio = std::pow(2.470 / anchor, 1.0 / 5.0);
    std::vector<double> out;
    const int m_lo = static_cast<int>(std::ceil(std::log(lo / anchor) / std::log(ratio) - 1e-9));
    const int m_hi = static_cast<int>(std::floor(std::log(hi / anchor) / std::log(ratio) + 1e-9));
    for (int m = m_lo; m <= m_hi; ++m) out.push_back(anchor * std::pow(ratio, m));
    return out;
}

}  // namespace superrad
