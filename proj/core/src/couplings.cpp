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

#include "superrad/couplings.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace superrad {

namespace {

constexpr int kSeriesTerms = 6;

constexpr double factorial(int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

// Coefficients of the even power series used below the switch point.
//   cos x/x^2 - sin x/x^3 = sum_k (-1)^k 2k/(2k+1)! x^(2k-2),  k >= 1
//   sin x/x               = sum_k (-1)^k 1/(2k+1)!  x^(2k),    k >= 0
//   sin x/x^2 + cos x/x^3 = 1/x^3 + sum_m (-1)^m (1-2m)/(2m)! x^(2m-3), m >= 1
//   cos x/x               = sum_k (-1)^k 1/(2k)! x^(2k-1),     k >= 0
struct SeriesTables {
    std::array<double, kSeriesTerms> radial_gamma{};
    std::array<double, kSeriesTerms> transverse_gamma{};
    std::array<double, kSeriesTerms> radial_f{};
    std::array<double, kSeriesTerms> transverse_f{};
};

constexpr SeriesTables make_tables() {
    SeriesTables t;
    for (int i = 0; i < kSeriesTerms; ++i) {
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        const int k = i + 1;
        t.radial_gamma[i] = -sign * (2.0 * k) / factorial(2 * k + 1);
        t.transverse_gamma[i] = sign / factorial(2 * i + 1);
        t.radial_f[i] = -sign * (1.0 - 2.0 * k) / factorial(2 * k);
        t.transverse_f[i] = sign / factorial(2 * i);
    }
    return t;
}

constexpr SeriesTables kTables = make_tables();

// sum_i c[i] * x2^i by Horner's rule.
double even_series(const std::array<double, kSeriesTerms>& c, double x2) {
    double acc = 0.0;
    for (int i = kSeriesTerms - 1; i >= 0; --i) acc = acc * x2 + c[i];
    return acc;
}

}  // namespace

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::exact: return "exact";
        case Regime::distant: return "distant";
        case Regime::close: return "close";
        case Regime::pure_superradiant: return "pure_superradiant";
    }
    return "unknown";
}

std::optional<Regime> parse_regime(std::string_view name) {
    if (name == "exact") return Regime::exact;
    if (name == "distant") return Regime::distant;
    if (name == "close") return Regime::close;
    if (name == "pure_superradiant" || name == "pure") return Regime::pure_superradiant;
    return std::nullopt;
}

double gamma_exact(const PairGeometry& geom) {
    const double xi = geom.xi;
    const double c2 = geom.cos2_alpha();
    double radial;
    double transverse;
    if (xi < kSeriesSwitchXi) {
        const double x2 = xi * xi;
        radial = even_series(kTables.radial_gamma, x2);
        transverse = even_series(kTables.transverse_gamma, x2);
    } else {
        const double s = std::sin(xi);
        const double c = std::cos(xi);
        radial = c / (xi * xi) - s / (xi * xi * xi);
        transverse = s / xi;
    }
    return 1.5 * ((1.0 - 3.0 * c2) * radial + (1.0 - c2) * transverse);
}

double f_exact(const PairGeometry& geom) {
    const double xi = geom.xi;
    const double c2 = geom.cos2_alpha();
    double radial;
    double transverse;
    if (xi < kSeriesSwitchXi) {
        const double x2 = xi * xi;
        radial = 1.0 / (x2 * xi) + even_series(kTables.radial_f, x2) / xi;
        transverse = even_series(kTables.transverse_f, x2) / xi;
    } else {
        const double s = std::sin(xi);
        const double c = std::cos(xi);
        radial = s / (xi * xi) + c / (xi * xi * xi);
        transverse = c / xi;
    }
    return 0.75 * ((1.0 - 3.0 * c2) * radial - (1.0 - c2) * transverse);
}

double f_close(const PairGeometry& geom) {
    return 0.75 * (1.0 - 3.0 * geom.cos2_alpha()) / (geom.xi * geom.xi * geom.xi);
}

CouplingSet uniform_couplings(std::size_t n_atoms, Regime regime, double f0) {
    const auto n = static_cast<Eigen::Index>(n_atoms);
    CouplingSet out;
    out.regime = regime;
    switch (regime) {
        case Regime::distant:
            out.gamma = Eigen::MatrixXd::Identity(n, n);
            out.f = Eigen::MatrixXd::Zero(n, n);
            break;
        case Regime::pure_superradiant:
            out.gamma = Eigen::MatrixXd::Ones(n, n);
            out.f = Eigen::MatrixXd::Constant(n, n, f0);
            out.f.diagonal().setZero();
            break;
        default:
            throw std::invalid_argument(
                "uniform_couplings: regime depends on atomic positions");
    }
    return out;
}

CouplingSet build_couplings(const AtomConfiguration& config, Regime regime,
                            double f0) {
    if (regime == Regime::distant || regime == Regime::pure_superradiant) {
        return uniform_couplings(config.size(), regime, f0);
    }
    const auto n = static_cast<Eigen::Index>(config.size());
    CouplingSet out;
    out.regime = regime;
    out.gamma = Eigen::MatrixXd::Identity(n, n);
    out.f = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const PairGeometry g = pair_geometry(config, static_cast<std::size_t>(i),
                                                 static_cast<std::size_t>(j));
            const double gij = regime == Regime::exact ? gamma_exact(g) : 1.0;
            const double fij = regime == Regime::exact ? f_exact(g) : f_close(g);
            out.gamma(i, j) = out.gamma(j, i) = gij;
            out.f(i, j) = out.f(j, i) = fij;
        }
    }
    return out;
}

}  // namespace superrad
