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

#include <cmath>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include <gtest/gtest.h>

#include "superrad/cli/cli.hpp"
#include "superrad/reference.hpp"

namespace {

using namespace superrad;
using namespace superrad::cli;
namespace fs = std::filesystem;

struct Invocation {
    int status;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "superrad");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

CsvTable parse(const std::string& text) {
    std::istringstream in(text);
    return read_csv(in);
}

std::size_t column(const CsvTable& table, const std::string& name) {
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        if (table.columns[i] == name) return i;
    throw std::out_of_range(name);
}

fs::path scratch_dir() {
    auto dir = fs::temp_directory_path() / ("superrad_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

TEST(Config, FileWithCommentsAndDashes) {
    RunConfig config;
    std::istringstream in(
        "# comment\n"
        "atoms = 4\n"
        "\n"
        "k0r = 0.5, 0.7   # trailing\n"
        "points-per-decade = 25\n"
        "regime = close\n"
        "initial = subradiant\n");
    load_config(config, in, "test.conf");
    EXPECT_EQ(config.atoms, 4u);
    EXPECT_EQ(config.k0r, (std::vector<double>{0.5, 0.7}));
    EXPECT_EQ(config.points_per_decade, 25u);
    EXPECT_EQ(config.regime, Regime::close);
    EXPECT_EQ(config.initial, InitialState::subradiant);
    EXPECT_EQ(resolve_samples(config), 10000u);
}

TEST(Config, UnknownKeyReportsLine) {
    RunConfig config;
    std::istringstream in("atoms = 3\nbogus = 1\n");
    try {
        load_config(config, in, "test.conf");
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("2"), std::string::npos) << e.what();
    }
}

TEST(Config, MalformedValuesRejected) {
    RunConfig config;
    EXPECT_THROW(apply_setting(config, "atoms", "three"), ConfigError);
    EXPECT_THROW(apply_setting(config, "atoms", "3x"), ConfigError);
    EXPECT_THROW(apply_setting(config, "regime", "nearby"), ConfigError);
    EXPECT_THROW(apply_setting(config, "grid", "spiral"), ConfigError);
}

TEST(Config, EveryKeyRoundTripsThroughDescribe) {
    RunConfig config;
    apply_setting(config, "samples", "123");
    apply_setting(config, "tmax", "4.5");
    RunConfig copy;
    for (const auto& [key, value] : describe(config)) {
        if (value.empty()) continue;
        apply_setting(copy, key, value);
    }
    EXPECT_EQ(describe(copy), describe(config));
}

TEST(Config, FlagsOverrideFile) {
    const auto dir = scratch_dir();
    const auto conf = dir / "flags.conf";
    {
        std::ofstream f(conf);
        f << "atoms = 4\nregime = pure_superradiant\ngrid = uniform\ntmax = 1\npoints = 11\n";
    }
    const auto r = invoke({"reference", "--config", conf.string(), "--atoms", "3"});
    ASSERT_EQ(r.status, kSuccess) << r.err;
    const auto table = parse(r.out);
    bool found = false;
    for (const auto& [k, v] : table.metadata)
        if (k == "atoms") found = v == "3";
    EXPECT_TRUE(found);
    EXPECT_EQ(table.rows.size(), 11u);
    fs::remove_all(dir);
}

TEST(Grid, Resolution) {
    RunConfig config;
    const auto uniform = resolve_grid(config);
    EXPECT_DOUBLE_EQ(uniform.back(), 10.0);
    EXPECT_EQ(uniform.size(), 2000u);
    config.grid = "log";
    const auto log = resolve_grid(config);
    EXPECT_NEAR(log.back(), 1e5, 1e-6);
    EXPECT_NEAR(log[1] - log[0], 1.0 / 199.0, 1e-12);
}

TEST(Csv, RoundTripIsExact) {
    CsvTable table{{{"a", "1"}, {"b", "x y"}}, {"t", "v"}, {{0.1, 1.0 / 3.0}, {1e-300, -2.5e17}}};
    std::ostringstream out;
    write_csv(out, table);
    const auto back = parse(out.str());
    EXPECT_EQ(back.metadata, table.metadata);
    EXPECT_EQ(back.columns, table.columns);
    EXPECT_EQ(back.rows, table.rows);
}

TEST(Csv, NonFiniteValuesRoundTrip) {
    CsvTable table{{}, {"x"}, {{std::nan("")}, {INFINITY}}};
    std::ostringstream out;
    write_csv(out, table);
    const auto back = parse(out.str());
    EXPECT_TRUE(std::isnan(back.rows[0][0]));
    EXPECT_TRUE(std::isinf(back.rows[1][0]));
}

TEST(Csv, FileWriteIsAtomic) {
    const auto dir = scratch_dir();
    const auto target = dir / "table.csv";
    write_csv_file(target, CsvTable{{}, {"x"}, {{1.0}}});
    EXPECT_TRUE(fs::exists(target));
    EXPECT_FALSE(fs::exists(dir / "table.csv.partial"));
    EXPECT_THROW(write_csv_file(dir / "missing" / "t.csv", CsvTable{{}, {"x"}, {{1.0}}}), IoError);
    fs::remove_all(dir);
}

TEST(ExitCodes, InProcess) {
    EXPECT_EQ(invoke({}).status, kUsageError);
    EXPECT_EQ(invoke({"--help"}).status, kSuccess);
    EXPECT_EQ(invoke({"bogus"}).status, kUsageError);
    EXPECT_EQ(invoke({"single", "--atoms", "x"}).status, kUsageError);
    EXPECT_EQ(invoke({"sweep", "--k0r", ""}).status, kUsageError);
    EXPECT_EQ(invoke({"darkcheck", "--atoms", "4"}).status, kUsageError);
    EXPECT_EQ(invoke({"single", "--config", "/nonexistent/file.conf"}).status, kUsageError);
}

TEST(ExitCodes, UnwritableOutputLeavesNoFile) {
    const auto dir = scratch_dir();
    const auto target = dir / "missing" / "out.csv";
    const std::string cmd = std::string(SUPERRAD_EXECUTABLE) +
                            " reference --atoms 3 --out " + target.string() + " 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    ASSERT_TRUE(WIFEXITED(raw));
    EXPECT_EQ(WEXITSTATUS(raw), kRuntimeError);
    EXPECT_FALSE(fs::exists(target));
    EXPECT_FALSE(fs::exists(target.string() + ".partial"));
    fs::remove_all(dir);
}

TEST(ExitCodes, ProcessUsageError) {
    const std::string cmd = std::string(SUPERRAD_EXECUTABLE) + " sweep --k0r '' >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    ASSERT_TRUE(WIFEXITED(raw));
    EXPECT_EQ(WEXITSTATUS(raw), kUsageError);
}

double residual_of(const std::string& text) {
    const auto pos = text.find('=');
    return std::stod(text.substr(pos + 1));
}

TEST(Darkcheck, Regimes) {
    const auto pure = invoke({"darkcheck", "--regime", "pure_superradiant"});
    ASSERT_EQ(pure.status, kSuccess) << pure.err;
    EXPECT_LT(residual_of(pure.out), 1e-12);
    const auto exact = invoke({"darkcheck", "--regime", "exact", "--k0r", "0.5"});
    ASSERT_EQ(exact.status, kSuccess) << exact.err;
    EXPECT_GT(residual_of(exact.out), 0.0);
    const auto distant = invoke({"darkcheck", "--regime", "distant"});
    ASSERT_EQ(distant.status, kSuccess) << distant.err;
    EXPECT_GT(residual_of(distant.out), 0.0);
}

TEST(Single, PureRegimeMatchesClosedForm) {
    const auto r = invoke({"single", "--regime", "pure_superradiant", "--tmax", "3", "--points", "301"});
    ASSERT_EQ(r.status, kSuccess) << r.err;
    const auto table = parse(r.out);
    const auto t = column(table, "t"), i = column(table, "I"), c = column(table, "C");
    const auto ip = column(table, "I_pure");
    ASSERT_EQ(table.rows.size(), 301u);
    for (const auto& row : table.rows) {
        const auto ref = reference::pure_superradiance(3, row[t]);
        EXPECT_NEAR(row[i], ref.intensity, 1e-6);
        EXPECT_NEAR(row[c], ref.coherence, 1e-6);
        EXPECT_EQ(row[ip], ref.intensity);
    }
}

TEST(Single, SeveralRealizations) {
    const auto r = invoke({"single", "--realizations", "3", "--tmax", "1", "--points", "11"});
    ASSERT_EQ(r.status, kSuccess) << r.err;
    const auto table = parse(r.out);
    EXPECT_EQ(table.rows.size(), 33u);
    EXPECT_EQ(table.rows.back()[column(table, "realization")], 2.0);
}

TEST(Ensemble, DeterministicAcrossRunsAndWorkers) {
    const std::vector<std::string> base = {"ensemble", "--samples", "24", "--tmax", "2", "--points", "41"};
    auto a_args = base;
    a_args.insert(a_args.end(), {"--workers", "1"});
    auto b_args = base;
    b_args.insert(b_args.end(), {"--workers", "3"});
    const auto a = invoke(a_args);
    const auto b = invoke(b_args);
    ASSERT_EQ(a.status, kSuccess) << a.err;
    EXPECT_EQ(parse(a.out).rows, parse(b.out).rows);
}

TEST(Ensemble, SingleSampleEqualsFirstRealization) {
    const auto e = parse(invoke({"ensemble", "--samples", "1", "--tmax", "2", "--points", "41"}).out);
    const auto s = parse(invoke({"single", "--tmax", "2", "--points", "41"}).out);
    ASSERT_EQ(e.rows.size(), s.rows.size());
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
        EXPECT_EQ(e.rows[k][column(e, "I_mean")], s.rows[k][column(s, "I")]);
        EXPECT_EQ(e.rows[k][column(e, "C_mean")], s.rows[k][column(s, "C")]);
    }
}

TEST(Ensemble, FigureTwoRecipeShowsPulse) {
    const auto r = invoke({"ensemble", "--samples", "500", "--k0r", "0.466", "--tmax", "2", "--points", "201"});
    ASSERT_EQ(r.status, kSuccess) << r.err;
    const auto table = parse(r.out);
    double peak = 0.0;
    for (const auto& row : table.rows) peak = std::max(peak, row[column(table, "I_mean")]);
    EXPECT_GT(peak, 3.0);
}

TEST(Sweep, RowsAndApproximateOutput) {
    const auto dir = scratch_dir();
    const auto out = dir / "sweep.csv", approx = dir / "approx.csv";
    const auto r = invoke({"sweep", "--samples", "10", "--k0r", "1.0,0.5", "--tmax", "2", "--points", "41",
                           "--out", out.string(), "--approx-out", approx.string()});
    ASSERT_EQ(r.status, kSuccess) << r.err;
    std::ifstream f(out), g(approx);
    const auto main = read_csv(f);
    const auto close = read_csv(g);
    ASSERT_EQ(main.rows.size(), 2u);
    ASSERT_EQ(close.rows.size(), 2u);
    EXPECT_EQ(main.rows[0][column(main, "k0R")], 0.5);
    EXPECT_EQ(main.rows[1][column(main, "n_samples")], 10.0);
    EXPECT_NE(main.rows[0][column(main, "A_I")], close.rows[0][column(close, "A_I")]);
    fs::remove_all(dir);
}

TEST(Reference, MaximaInMetadata) {
    const auto r = invoke({"reference", "--atoms", "4"});
    ASSERT_EQ(r.status, kSuccess) << r.err;
    const auto table = parse(r.out);
    const auto ref = reference::pure_superradiance_maxima(4);
    bool found = false;
    for (const auto& [k, v] : table.metadata)
        if (k == "I_max") {
            found = true;
            EXPECT_NEAR(std::stod(v), ref.a_intensity, 1e-12);
        }
    EXPECT_TRUE(found);
}

}  // namespace
