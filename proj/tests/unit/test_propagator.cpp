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
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "dense_oracle.hpp"
#include "superrad/observables.hpp"
#include "superrad/propagator.hpp"
#include "superrad/reference.hpp"

namespace {

using namespace superrad;

CouplingSet exact_couplings(std::size_t n, double k0R, std::uint64_t seed) {
    return build_couplings(sample_configuration(n, k0R, seed), Regime::exact);
}

double excited_population(const BlockDensityMatrix& rho) {
    double p = 0.0;
    for (std::size_t n = 1; n < rho.n_blocks(); ++n) p += rho.block(n).trace().real();
    return p;
}

TEST(TimeGrid, Uniform) {
    const auto g = TimeGrid::uniform(10.0, 2000);
    EXPECT_EQ(g.size(), 2000u);
    EXPECT_EQ(g[0], 0.0);
    EXPECT_EQ(g.back(), 10.0);
    EXPECT_EQ(g.uniform_count(), 2000u);
    EXPECT_EQ(g.spacing(), TimeGrid::Spacing::uniform);
}

TEST(TimeGrid, SubradianceDefault) {
    const auto g = TimeGrid::subradiance_default();
    EXPECT_EQ(g.uniform_count(), 200u);
    EXPECT_EQ(g.back(), 1e5);
    EXPECT_EQ(g.size(), 200u + 5 * 40);
    std::size_t below_one = 0;
    for (double t : g.points()) below_one += t < 1.0;
    EXPECT_GE(below_one, 50u);
    EXPECT_NEAR(g[240] / g[200], 10.0, 1e-9);
}

TEST(TimeGrid, Validation) {
    EXPECT_THROW(TimeGrid::from_points({0.0}), std::invalid_argument);
    EXPECT_THROW(TimeGrid::from_points({0.1, 0.2}), std::invalid_argument);
    EXPECT_THROW(TimeGrid::from_points({0.0, 0.2, 0.2}), std::invalid_argument);
    EXPECT_THROW(TimeGrid::uniform(-1.0, 10), std::invalid_argument);
    EXPECT_THROW(TimeGrid::log_after(1.0, 10, 0.5, 4), std::invalid_argument);
    const auto g = TimeGrid::from_points({0.0, 0.1, 0.2, 0.5});
    EXPECT_EQ(g.uniform_count(), 3u);
}

TEST(Evolve, SingleAtomDecay) {
    const auto gen = assemble(uniform_couplings(1, Regime::distant), 1);
    const auto grid = TimeGrid::from_points({0.0, 0.1, 1.0, 5.0});
    const auto states = evolve(gen, fully_excited_state(1), grid);
    for (std::size_t k = 1; k < grid.size(); ++k) {
        const double p = states[k].block(1)(0, 0).real();
        EXPECT_NEAR(p / std::exp(-grid[k]), 1.0, 1e-8) << grid[k];
    }
}

TEST(Evolve, FirstStateIsTheInitialState) {
    std::mt19937_64 rng(1);
    const auto rho = oracle::random_state(3, rng);
    const auto states = evolve(assemble(exact_couplings(3, 0.6, 1), 3), rho, TimeGrid::uniform(1, 3));
    for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(states[0].block(n), rho.block(n));
}

TEST(Evolve, MatchesDiagonalizationOracle) {
    std::mt19937_64 rng(12);
    const auto grid = TimeGrid::from_points({0.0, 0.013, 0.1, 0.37, 1.0, 2.5, 7.0});
    for (std::size_t n = 2; n <= 4; ++n) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto gen = assemble(exact_couplings(n, 0.4 + 0.2 * seed, seed), n);
            const auto rho = oracle::random_state(n, rng);
            const auto states = evolve(gen, rho, grid);
            const Eigen::VectorXcd v0 = gen.layout.vectorize(rho);
            for (std::size_t k = 1; k < grid.size(); ++k) {
                const Eigen::VectorXcd want = oracle::expm_apply(gen.a, v0, grid[k]);
                const Eigen::VectorXcd got = gen.layout.vectorize(states[k]);
                EXPECT_LE((got - want).norm(), 1e-8 * want.norm()) << n << " " << seed << " " << grid[k];
            }
        }
    }
}

TEST(Evolve, SemigroupProperty) {
    std::mt19937_64 rng(4);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto gen = assemble(exact_couplings(3, 0.5 + 0.1 * seed, seed), 3);
        const auto rho = oracle::random_state(3, rng);
        const double t1 = 0.3 + 0.1 * seed, t2 = 1.7;
        const auto direct = evolve(gen, rho, TimeGrid::from_points({0.0, t2}))[1];
        const auto half = evolve(gen, rho, TimeGrid::from_points({0.0, t1}))[1];
        const auto twice = evolve(gen, half, TimeGrid::from_points({0.0, t2 - t1}))[1];
        auto diff = direct;
        diff -= twice;
        EXPECT_LE(diff.frobenius_norm(), 1e-9);
    }
}

TEST(Evolve, StatesStayPhysical) {
    const auto grid = TimeGrid::uniform(10.0, 101);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto c = exact_couplings(4, 0.2 + 0.1 * seed, seed);
        const auto states = evolve(assemble(c, 4), fully_excited_state(4), grid);
        for (const auto& rho : states) {
            EXPECT_NEAR(rho.trace().real(), 1.0, 1e-9);
            EXPECT_LE(rho.max_hermiticity_error(), 1e-10);
            EXPECT_GE(rho.min_eigenvalue(), -1e-9);
            EXPECT_GE(intensity(rho, c), -1e-10);
        }
    }
}

TEST(Evolve, RelaxesToGroundState) {
    // Slow collective modes of close pairs decay at rates far below 1, so the
    // horizon is set by each configuration's slowest nonzero rate.
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const double k0R = 0.4 + 0.05 * seed;
        const auto c = exact_couplings(3, k0R, seed);
        const auto gen = assemble(c, 3);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(gen.a, false);
        double gap = std::numeric_limits<double>::infinity();
        for (auto e : es.eigenvalues()) {
            if (std::abs(e) > 1e-9) gap = std::min(gap, -e.real());
        }
        ASSERT_GT(gap, 0.0);
        const double horizon = std::max(200.0, 40.0 / gap);
        const auto last = evolve(gen, fully_excited_state(3), TimeGrid::from_points({0.0, horizon})).back();
        EXPECT_LT(excited_population(last), 1e-6) << seed << " horizon " << horizon;
        EXPECT_NEAR(last.block(0)(0, 0).real(), 1.0, 1e-6);
    }
}

TEST(Evolve, PureRegimeReproducesClosedFormForThreeAtoms) {
    const auto c = uniform_couplings(3, Regime::pure_superradiant);
    const auto grid = TimeGrid::uniform(5.0, 501);
    const auto series = observe(evolve(assemble(c, 3), fully_excited_state(3), grid), c, grid);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto ref = reference::pure_superradiance(3, grid[k]);
        EXPECT_NEAR(series.intensity[k], ref.intensity, 1e-6 * std::abs(ref.intensity));
        EXPECT_NEAR(series.coherence[k], ref.coherence, 1e-6 * std::abs(ref.coherence) + 1e-15);
    }
}

TEST(Evolve, PureRegimeIsIndependentOfCommonShift) {
    const auto grid = TimeGrid::uniform(5.0, 501);
    for (std::size_t n : {3, 4}) {
        const auto base = simulate(uniform_couplings(n, Regime::pure_superradiant, 0.0),
                                   fully_excited_state(n), grid);
        for (double f0 : {1.0, 10.0}) {
            const auto other = simulate(uniform_couplings(n, Regime::pure_superradiant, f0),
                                        fully_excited_state(n), grid);
            for (std::size_t k = 0; k < grid.size(); ++k) {
                EXPECT_NEAR(other.intensity[k], base.intensity[k], 1e-9);
                EXPECT_NEAR(other.coherence[k], base.coherence[k], 1e-9);
            }
        }
    }
}

TEST(Propagator, NonFiniteGeneratorIsReported) {
    auto c = uniform_couplings(2, Regime::pure_superradiant);
    c.f(0, 1) = c.f(1, 0) = std::numeric_limits<double>::infinity();
    const Propagator prop(assemble(c, 2), 2);
    EXPECT_THROW(prop.step_propagator(0.1), PropagationError);
}

TEST(HermitianCoordinates, RoundTripAndFunctionals) {
    std::mt19937_64 rng(8);
    const auto rho = oracle::random_state(4, rng);
    const HermitianCoordinates coords(4, 4);
    EXPECT_EQ(coords.size(), 70);
    const Eigen::VectorXd x = coords.encode(rho);
    const auto back = coords.decode(x);
    for (std::size_t n = 0; n <= 4; ++n) EXPECT_LE((back.block(n) - rho.block(n)).norm(), 1e-15);
    EXPECT_NEAR(coords.trace(x), 1.0, 1e-14);
    EXPECT_NEAR(coords.coherence_l1(x), coherence_l1(rho), 1e-14);
}

TEST(HermitianCoordinates, RejectsWeightAboveTop) {
    const HermitianCoordinates coords(3, 1);
    EXPECT_EQ(coords.size(), 1 + 9);
    EXPECT_THROW(coords.encode(fully_excited_state(3)), std::invalid_argument);
    EXPECT_NO_THROW(coords.encode(subradiant_state(3)));
}

}  // namespace
