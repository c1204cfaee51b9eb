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
#include <charconv>
#include <fstream>
#include <sstream>

#include "superrad/cli/cli.hpp"

namespace superrad::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string normalize_key(std::string_view key) {
    std::string k(trim(key));
    std::replace(k.begin(), k.end(), '-', '_');
    return k;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view why) {
    throw ConfigError("invalid value '" + std::string(value) + "' for " + std::string(key) +
                      ": " + std::string(why));
}

double parse_double(std::string_view key, std::string_view text) {
    const std::string_view v = trim(text);
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
        bad_value(key, text, "expected a number");
    }
    return out;
}

double parse_positive(std::string_view key, std::string_view text) {
    const double v = parse_double(key, text);
    if (!(v > 0.0)) bad_value(key, text, "must be positive");
    return v;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view text) {
    const std::string_view v = trim(text);
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
        bad_value(key, text, "expected a non-negative integer");
    }
    return out;
}

std::size_t parse_count(std::string_view key, std::string_view text, std::size_t minimum) {
    const auto v = parse_unsigned(key, text);
    if (v < minimum) bad_value(key, text, "must be at least " + std::to_string(minimum));
    return static_cast<std::size_t>(v);
}

std::vector<double> parse_list(std::string_view key, std::string_view text) {
    std::vector<double> out;
    std::string_view rest = trim(text);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = trim(rest.substr(0, comma));
        if (!item.empty()) out.push_back(parse_positive(key, item));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return out;
}

std::string join(const std::vector<double>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ',';
        s += format_number(values[i]);
    }
    return s;
}

}  // namespace

const std::vector<std::string>& setting_keys() {
    static const std::vector<std::string> keys = {
        "atoms", "k0r", "samples", "seed", "regime", "initial", "f0", "xi_min",
        "grid", "tmax", "points", "t1", "points_per_decade", "workers", "chunk",
        "out", "approx_out", "grid_scaling", "realizations"};
    return keys;
}

void apply_setting(RunConfig& c, std::string_view raw_key, std::string_view raw_value) {
    const std::string key = normalize_key(raw_key);
    const std::string_view value = trim(raw_value);
    if (key == "atoms") {
        c.atoms = parse_count(key, value, 1);
        if (c.atoms > kMaxAtoms) bad_value(key, value, "at most 12 atoms are supported");
    } else if (key == "k0r") {
        c.k0r = parse_list(key, value);
    } else if (key == "samples") {
        c.samples = parse_count(key, value, 1);
    } else if (key == "seed") {
        c.seed = parse_unsigned(key, value);
    } else if (key == "regime") {
        const auto r = parse_regime(value);
        if (!r) bad_value(key, value, "expected exact, distant, close or pure_superradiant");
        c.regime = *r;
    } else if (key == "initial") {
        const auto s = parse_initial_state(value);
        if (!s) bad_value(key, value, "expected fully_excited or subradiant");
        c.initial = *s;
    } else if (key == "f0") {
        c.f0 = parse_double(key, value);
    } else if (key == "xi_min") {
        c.xi_min = parse_positive(key, value);
    } else if (key == "grid") {
        if (value != "uniform" && value != "log") bad_value(key, value, "expected uniform or log");
        c.grid = std::string(value);
    } else if (key == "tmax") {
        c.tmax = parse_positive(key, value);
    } else if (key == "points") {
        c.points = parse_count(key, value, 2);
    } else if (key == "t1") {
        c.t1 = parse_positive(key, value);
    } else if (key == "points_per_decade") {
        c.points_per_decade = parse_count(key, value, 1);
    } else if (key == "workers") {
        c.workers = parse_count(key, value, 0);
    } else if (key == "chunk") {
        c.chunk = parse_count(key, value, 1);
    } else if (key == "out") {
        c.out = std::string(value);
    } else if (key == "approx_out") {
        c.approx_out = std::string(value);
    } else if (key == "grid_scaling") {
        c.grid_scaling = parse_double(key, value);
        if (c.grid_scaling < 0.0) bad_value(key, value, "must be non-negative");
    } else if (key == "realizations") {
        c.realizations = parse_count(key, value, 1);
    } else {
        throw ConfigError("unknown setting '" + key + "'");
    }
}

void load_config(RunConfig& config, std::istream& in, std::string_view source_name) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        view = trim(view.substr(0, view.find('#')));
        if (view.empty()) continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(std::string(source_name) + ":" + std::to_string(line_no) +
                              ": expected 'key = value'");
        }
        try {
            apply_setting(config, view.substr(0, eq), view.substr(eq + 1));
        } catch (const ConfigError& e) {
            throw ConfigError(std::string(source_name) + ":" + std::to_string(line_no) + ": " +
                              e.what());
        }
    }
}

void load_config_file(RunConfig& config, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read configuration file " + path.string());
    load_config(config, in, path.string());
}

std::vector<std::pair<std::string, std::string>> describe(const RunConfig& c) {
    const TimeGrid grid = resolve_grid(c);
    const bool uniform = grid.spacing() == TimeGrid::Spacing::uniform;
    std::vector<std::pair<std::string, std::string>> out = {
        {"atoms", std::to_string(c.atoms)},
        {"k0r", join(c.k0r)},
        {"samples", std::to_string(resolve_samples(c))},
        {"seed", std::to_string(c.seed)},
        {"regime", std::string(to_string(c.regime))},
        {"initial", std::string(to_string(c.initial))},
        {"f0", format_number(c.f0)},
        {"xi_min", format_number(c.xi_min)},
        {"grid", uniform ? "uniform" : "log"},
        {"tmax", format_number(grid.back())},
        {"points", std::to_string(uniform ? grid.size() : grid.uniform_count())},
    };
    if (!uniform) {
        out.emplace_back("t1", format_number(c.t1));
        out.emplace_back("points_per_decade", std::to_string(c.points_per_decade));
    }
    out.emplace_back("workers", std::to_string(c.workers));
    out.emplace_back("chunk", std::to_string(c.chunk));
    out.emplace_back("grid_scaling", format_number(c.grid_scaling));
    out.emplace_back("realizations", std::to_string(c.realizations));
    return out;
}

std::size_t resolve_samples(const RunConfig& c) {
    if (c.samples) return *c.samples;
    return c.initial == InitialState::subradiant ? 10000 : 5000;
}

TimeGrid resolve_grid(const RunConfig& c) {
    const std::string mode =
        c.grid.value_or(c.initial == InitialState::subradiant ? "log" : "uniform");
    try {
        if (mode == "uniform") return TimeGrid::uniform(c.tmax.value_or(10.0), c.points.value_or(2000));
        return TimeGrid::log_after(c.t1, c.points.value_or(200), c.tmax.value_or(1e5),
                                   c.points_per_decade);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid time grid: ") + e.what());
    }
}

EnsembleSpec make_spec(const RunConfig& c) {
    if (c.k0r.empty()) throw ConfigError("no k0r value given");
    EnsembleSpec spec;
    spec.n_atoms = c.atoms;
    spec.k0R = c.k0r.front();
    spec.n_samples = resolve_samples(c);
    spec.base_seed = c.seed;
    spec.regime = c.regime;
    spec.f0 = c.f0;
    spec.initial = c.initial;
    spec.grid = resolve_grid(c);
    spec.sampling.xi_min = c.xi_min;
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return spec;
}

}  // namespace superrad::cli
