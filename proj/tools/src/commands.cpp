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

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "superrad/cli/cli.hpp"
#include "superrad/reference.hpp"

#ifndef SUPERRAD_VERSION
#define SUPERRAD_VERSION "unknown"
#endif

namespace superrad::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<std::pair<std::string, std::string>> metadata(std::string_view command,
                                                          const RunConfig& config) {
    std::vector<std::pair<std::string, std::string>> meta = {
        {"superrad_version", SUPERRAD_VERSION}, {"command", std::string(command)}};
    for (auto& kv : describe(config)) meta.push_back(std::move(kv));
    return meta;
}

CsvTable sweep_table_for(const RunConfig& config, Regime regime) {
    if (config.k0r.empty()) throw ConfigError("sweep needs at least one k0r value");
    RunConfig c = config;
    c.regime = regime;
    const EnsembleSpec spec = make_spec(c);
    const SweepResult result =
        sweep(spec, c.k0r, {c.workers, c.chunk}, SweepOptions{c.grid_scaling});
    CsvTable t{metadata("sweep", c),
               {"k0R", "A_I", "t_I", "A_C", "t_C", "A_I_stderr", "A_C_stderr", "n_samples"},
               {}};
    for (const auto& r : result.rows) {
        t.rows.push_back({r.k0R, r.a_intensity, r.t_intensity, r.a_coherence, r.t_coherence,
                          r.a_intensity_stderr, r.a_coherence_stderr,
                          static_cast<double>(r.n_samples)});
    }
    return t;
}

void emit(const std::string& path, const CsvTable& table, std::ostream& out) {
    if (path.empty()) {
        write_csv(out, table);
    } else {
        write_csv_file(path, table);
    }
}

}  // namespace

CsvTable single_table(const RunConfig& config) {
    const EnsembleSpec spec = make_spec(config);
    const bool pure = reference::has_pure_superradiance(spec.n_atoms) &&
                      spec.initial == InitialState::fully_excited;
    const bool excited = spec.initial == InitialState::fully_excited;
    CsvTable t{metadata("single", config),
               {"realization", "t", "I", "C", "I_pure", "C_pure", "I_indep", "C_indep"},
               {}};
    for (std::size_t k = 0; k < config.realizations; ++k) {
        const TimeSeries s = run_realization(spec, k);
        for (std::size_t i = 0; i < s.size(); ++i) {
            const double time = s.grid[i];
            const auto p = pure ? reference::pure_superradiance(spec.n_atoms, time)
                                : reference::Point{kNaN, kNaN};
            // Independent emitters: every excitation decays at the single-atom rate.
            const auto ind = excited ? reference::independent_emission(spec.n_atoms, time)
                                     : reference::Point{std::exp(-time), std::exp(-time)};
            t.rows.push_back({static_cast<double>(k), time, s.intensity[i], s.coherence[i],
                              p.intensity, p.coherence, ind.intensity, ind.coherence});
        }
    }
    return t;
}

CsvTable ensemble_table(const RunConfig& config) {
    const EnsembleSpec spec = make_spec(config);
    const TimeSeries s = run_ensemble(spec, {config.workers, config.chunk});
    CsvTable t{metadata("ensemble", config), {"t", "I_mean", "I_stderr", "C_mean", "C_stderr"}, {}};
    for (std::size_t i = 0; i < s.size(); ++i) {
        t.rows.push_back({s.grid[i], s.intensity[i], s.intensity_stderr[i], s.coherence[i],
                          s.coherence_stderr[i]});
    }
    return t;
}

CsvTable sweep_table(const RunConfig& config) { return sweep_table_for(config, config.regime); }

CsvTable reference_table(const RunConfig& config) {
    const std::size_t n = config.atoms;
    const TimeGrid grid = resolve_grid(config);
    const bool pure = reference::has_pure_superradiance(n);
    CsvTable t{metadata("reference", config), {"t", "I_pure", "C_pure", "I_indep", "C_indep"}, {}};
    if (pure) {
        const PulseStats m = reference::pure_superradiance_maxima(n);
        t.metadata.emplace_back("I_max", format_number(m.a_intensity));
        t.metadata.emplace_back("t_I", format_number(m.t_intensity));
        t.metadata.emplace_back("C_max", format_number(m.a_coherence));
        t.metadata.emplace_back("t_C", format_number(m.t_coherence));
    }
    for (double time : grid.points()) {
        const auto p = pure ? reference::pure_superradiance(n, time) : reference::Point{kNaN, kNaN};
        const auto ind = reference::independent_emission(n, time);
        t.rows.push_back({time, p.intensity, p.coherence, ind.intensity, ind.coherence});
    }
    return t;
}

double darkcheck_residual(const RunConfig& config) {
    if (config.atoms != 3) throw ConfigError("darkcheck uses the three-atom subradiant state");
    RunConfig c = config;
    c.initial = InitialState::subradiant;
    c.samples = 1;
    const EnsembleSpec spec = make_spec(c);
    return darkness_residual(subradiant_state(3), realization_couplings(spec, 0));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Collective emission of few dipole-coupled two-level atoms", "superrad"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    app.add_option("--config", config_path, "key = value settings file; flags take precedence");

    static const std::map<std::string, std::string> help = {
        {"atoms", "number of atoms N"},
        {"k0r", "mean pair distance in units of 1/k0; comma list for sweep"},
        {"samples", "random configurations per k0R"},
        {"seed", "base seed of the realization seeds"},
        {"regime", "exact | distant | close | pure_superradiant"},
        {"initial", "fully_excited | subradiant"},
        {"f0", "common shift of the pure_superradiant regime"},
        {"xi_min", "smallest admitted k0 r_ij"},
        {"grid", "uniform | log"},
        {"tmax", "last time point, 1/gamma0 units"},
        {"points", "points of the grid (of its uniform part for log)"},
        {"t1", "end of the uniform part of a log grid"},
        {"points_per_decade", "density of the log part"},
        {"workers", "worker threads, 0 = all cores"},
        {"chunk", "realizations per reduction unit"},
        {"out", "output CSV path, standard output if empty"},
        {"approx_out", "sweep: also run with static couplings into this file"},
        {"grid_scaling", "sweep: compress the grid by (k0R/value)^3 below value"},
        {"realizations", "single: number of consecutive realizations"},
    };
    std::map<std::string, std::string> flag_values;
    std::map<std::string, CLI::Option*> flags;
    for (const auto& key : setting_keys()) {
        std::string name = key;
        std::replace(name.begin(), name.end(), '_', '-');
        flags[key] = app.add_option("--" + name, flag_values[key], help.at(key));
    }

    auto* single = app.add_subcommand("single", "I(t), C(t) of individual realizations");
    auto* ensemble = app.add_subcommand("ensemble", "configuration-averaged I(t), C(t)");
    auto* sweep_cmd = app.add_subcommand("sweep", "pulse statistics as a function of k0R");
    auto* darkcheck = app.add_subcommand("darkcheck", "dissipator norm of the subradiant state");
    auto* reference_cmd = app.add_subcommand("reference", "closed-form reference curves");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kSuccess;
        }
        err << "superrad: " << e.what() << "\n" << "Run with --help for usage.\n";
        return kUsageError;
    }

    try {
        RunConfig config;
        if (!config_path.empty()) load_config_file(config, config_path);
        for (const auto& key : setting_keys()) {
            if (flags[key]->count() > 0) apply_setting(config, key, flag_values[key]);
        }

        if (*darkcheck) {
            out << "darkness_residual = " << format_number(darkcheck_residual(config)) << '\n';
            return kSuccess;
        }
        if (*single) emit(config.out, single_table(config), out);
        if (*ensemble) emit(config.out, ensemble_table(config), out);
        if (*reference_cmd) emit(config.out, reference_table(config), out);
        if (*sweep_cmd) {
            const CsvTable main_table = sweep_table(config);
            const CsvTable approx = config.approx_out.empty()
                                        ? CsvTable{}
                                        : sweep_table_for(config, Regime::close);
            emit(config.out, main_table, out);
            if (!config.approx_out.empty()) write_csv_file(config.approx_out, approx);
        }
        return kSuccess;
    } catch (const ConfigError& e) {
        err << "superrad: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "superrad: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "superrad: " << e.what() << '\n';
        return kRuntimeError;
    }
}

}  // namespace superrad::cli
