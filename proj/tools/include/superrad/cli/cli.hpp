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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superrad/ensemble.hpp"

namespace superrad::cli {

/// Exit status of the `superrad` executable.
enum ExitCode : int { kSuccess = 0, kUsageError = 1, kRuntimeError = 2 };

/// Invalid or unknown configuration entry. Maps to kUsageError.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Output could not be written. Maps to kRuntimeError.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/**
 * Settings shared by all subcommands. Every field has a key usable both in a
 * configuration file (`key = value`) and as a flag (`--key value`, with
 * underscores written as dashes). Unset optional fields take defaults that
 * depend on the initial state.
 */
struct RunConfig {
    std::size_t atoms = 3;
    std::vector<double> k0r{0.466};
    std::optional<std::size_t> samples;
    std::uint64_t seed = 1;
    Regime regime = Regime::exact;
    InitialState initial = InitialState::fully_excited;
    double f0 = 0.0;
    double xi_min = kDefaultXiMin;

    std::optional<std::string> grid;  ///< "uniform" or "log"
    std::optional<double> tmax;
    std::optional<std::size_t> points;
    double t1 = 1.0;
    std::size_t points_per_decade = 40;

    std::size_t workers = 0;
    std::size_t chunk = 16;
    std::string out;         ///< empty writes to standard output
    std::string approx_out;  ///< sweep only: second run with static couplings
    double grid_scaling = 0.0;
    std::size_t realizations = 1;
};

/// Keys accepted by apply_setting, in documentation order.
const std::vector<std::string>& setting_keys();

/// Parses `value` into the field named `key`. Dashes in `key` are read as
/// underscores. Throws ConfigError on unknown keys and malformed values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Applies every `key = value` line of a file; `#` starts a comment.
void load_config_file(RunConfig& config, const std::filesystem::path& path);
void load_config(RunConfig& config, std::istream& in, std::string_view source_name);

/// Canonical `key, value` pairs of every setting, used as CSV metadata.
std::vector<std::pair<std::string, std::string>> describe(const RunConfig& config);

/// Samples per k0R; 5000 (fully excited) or 10000 (subradiant) when unset.
std::size_t resolve_samples(const RunConfig& config);
TimeGrid resolve_grid(const RunConfig& config);

/// Ensemble description for the first k0R of `config`.
EnsembleSpec make_spec(const RunConfig& config);

struct CsvTable {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// 17 significant digits, enough to round-trip any double.
std::string format_number(double value);

void write_csv(std::ostream& out, const CsvTable& table);
CsvTable read_csv(std::istream& in);

/// Writes to a sibling temporary file and renames it over `path`, so a
/// failed run never leaves a partial file. Throws IoError.
void write_csv_file(const std::filesystem::path& path, const CsvTable& table);

CsvTable single_table(const RunConfig& config);
CsvTable ensemble_table(const RunConfig& config);
CsvTable sweep_table(const RunConfig& config);
CsvTable reference_table(const RunConfig& config);
double darkcheck_residual(const RunConfig& config);

/// Entry point of the executable; returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace superrad::cli
