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
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "superrad/geometry.hpp"

namespace {

using namespace superrad;

double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

// Asymptotic Kolmogorov distribution, P(sqrt(n) D > lambda).
double kolmogorov_p(double d, std::size_t n) {
    const double sn = std::sqrt(static_cast<double>(n));
    const double lambda = (sn + 0.12 + 0.11 / sn) * d;
    double p = 0.0;
    for (int k = 1; k <= 100; ++k) {
        p += 2.0 * ((k % 2) ? 1.0 : -1.0) * std::exp(-2.0 * k * k * lambda * lambda);
    }
    return std::clamp(p, 0.0, 1.0);
}

TEST(SampleConfiguration, TwoAtomsSitAtTheRequestedDistance) {
    const auto config = sample_configuration(2, 0.5, 11);
    EXPECT_NEAR(pair_geometry(config, 0, 1).xi, 0.5, 1e-15);
}

TEST(SampleConfiguration, MeanOfThreePairsEqualsK0R) {
    const auto config = sample_configuration(3, 0.466, 3);
    const double mean = (pair_geometry(config, 0, 1).xi + pair_geometry(config, 0, 2).xi +
                         pair_geometry(config, 1, 2).xi) / 3.0;
    EXPECT_NEAR(mean, 0.466, 0.466 * 1e-12);
}

TEST(SampleConfiguration, IsDeterministicInTheSeed) {
    const auto a = sample_configuration(4, 0.9, 1234);
    const auto b = sample_configuration(4, 0.9, 1234);
    const auto c = sample_configuration(4, 0.9, 1235);
    EXPECT_EQ(a.positions(), b.positions());
    EXPECT_NE(a.positions(), c.positions());
}

TEST(SampleConfiguration, RescalingIsExactForManySizesAndSeeds) {
    for (std::size_t n = 2; n <= 6; ++n) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const double k0R = 0.1 + 0.37 * static_cast<double>(seed % 13);
            const auto config = sample_configuration(n, k0R, seed);
            EXPECT_NEAR(config.mean_pair_distance(), k0R, 1e-12 * k0R) << n << " " << seed;
        }
    }
}

TEST(SampleConfiguration, CutoffIsNeverViolated) {
    SamplingOptions opts;
    opts.xi_min = 0.3;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto config = sample_configuration(5, 0.5, seed, opts);
        EXPECT_GT(config.min_pair_distance(), 0.3);
    }
}

TEST(SampleConfiguration, ExhaustedRedrawsRaiseSamplingError) {
    SamplingOptions opts;
    opts.xi_min = 0.45;
    opts.max_redraws = 50;
    EXPECT_THROW(sample_configuration(6, 0.5, 1, opts), SamplingError);
}

TEST(SampleConfiguration, RejectsInvalidArguments) {
    EXPECT_THROW(sample_configuration(1, 0.5, 1), std::invalid_argument);
    SamplingOptions opts;
    opts.xi_min = 1.0;
    EXPECT_THROW(sample_configuration(3, 0.5, 1, opts), std::invalid_argument);
}

TEST(SampleConfiguration, RadialCoordinateFollowsTheUniformBallLaw) {
    std::vector<double> radii;
    for (std::uint64_t seed = 0; radii.size() < 100000; ++seed) {
        const auto s = sample_configuration_with_container(2, 1.0, seed);
        for (const auto& p : s.config.positions()) radii.push_back(norm(p) / s.container_radius);
    }
    std::sort(radii.begin(), radii.end());
    double d = 0.0;
    const double n = static_cast<double>(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        ASSERT_LE(radii[i], 1.0 + 1e-12);
        const double cdf = radii[i] * radii[i] * radii[i];
        d = std::max({d, std::abs(cdf - i / n), std::abs(cdf - (i + 1) / n)});
    }
    EXPECT_GT(kolmogorov_p(d, radii.size()), 0.01) << "D = " << d;
}

TEST(PairGeometry, AlongTheAxis) {
    const AtomConfiguration config({{0, 0, 0}, {0, 0, 1}});
    const auto g = pair_geometry(config, 0, 1);
    EXPECT_DOUBLE_EQ(g.xi, 1.0);
    EXPECT_NEAR(g.alpha, 0.0, 1e-15);
}

TEST(PairGeometry, PerpendicularToTheAxis) {
    const AtomConfiguration config({{0, 0, 0}, {1, 0, 0}});
    const auto g = pair_geometry(config, 0, 1);
    EXPECT_DOUBLE_EQ(g.xi, 1.0);
    EXPECT_NEAR(g.alpha, std::numbers::pi / 2, 1e-15);
}

TEST(PairGeometry, Diagonal) {
    const AtomConfiguration config({{0, 0, 0}, {1, 0, 1}});
    const auto g = pair_geometry(config, 0, 1);
    EXPECT_NEAR(g.xi, std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(g.alpha, std::numbers::pi / 4, 1e-15);
}

TEST(PairGeometry, RejectsSameIndex) {
    const AtomConfiguration config({{0, 0, 0}, {1, 0, 1}});
    EXPECT_THROW(pair_geometry(config, 1, 1), std::invalid_argument);
}

TEST(PairGeometry, IsSymmetricUnderExchange) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto config = sample_configuration(4, 0.8, seed);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i + 1; j < 4; ++j) {
                const auto a = pair_geometry(config, i, j);
                const auto b = pair_geometry(config, j, i);
                EXPECT_EQ(a.xi, b.xi);
                EXPECT_EQ(a.cos2_alpha(), b.cos2_alpha());
                EXPECT_GE(a.alpha, 0.0);
                EXPECT_LE(a.alpha, std::numbers::pi / 2);
            }
        }
    }
}

TEST(AtomConfiguration, ValidatesInvariants) {
    EXPECT_THROW(AtomConfiguration({}), std::invalid_argument);
    EXPECT_THROW(AtomConfiguration({{0, 0, 0}}, {0, 0, 2}), std::invalid_argument);
    EXPECT_THROW(AtomConfiguration({{0, 0, 0}, {0, 0, 0.1}}, {0, 0, 1}, 0.2),
                 std::invalid_argument);
    EXPECT_NO_THROW(AtomConfiguration({{0, 0, 0}}));
}

TEST(WriteConfiguration, HeaderAndThreeColumns) {
    const AtomConfiguration config({{0, 0, 0}, {0.5, -1, 2}});
    std::ostringstream out;
    write_configuration(out, config, 0.75, 42);
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "# k0R=0.75 seed=42");
    double x, y, z;
    in >> x >> y >> z >> x >> y >> z;
    EXPECT_EQ(x, 0.5);
    EXPECT_EQ(y, -1.0);
    EXPECT_EQ(z, 2.0);
}

}  // namespace
