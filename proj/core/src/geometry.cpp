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

#include "superrad/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "superrad/random.hpp"

namespace superrad {

namespace {

double distance(const Vec3& a, const Vec3& b) {
    const double dx = a[0] - b[0];
    const double dy = a[1] - b[1];
    const double dz = a[2] - b[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double norm(const Vec3& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

// 53 random bits mapped onto [0, 1). Avoids std::uniform_real_distribution so
// that the stream is identical across standard library implementations.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Vec3 uniform_in_unit_ball(std::mt19937_64& rng) {
    const double cos_theta = 2.0 * uniform01(rng) - 1.0;
    const double phi = 2.0 * std::numbers::pi * uniform01(rng);
    const double r = std::cbrt(uniform01(rng));
    const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
    return {r * sin_theta * std::cos(phi), r * sin_theta * std::sin(phi),
            r * cos_theta};
}

}  // namespace

AtomConfiguration::AtomConfiguration(std::vector<Vec3> positions,
                                     Vec3 dipole_axis, double xi_min)
    : positions_(std::move(positions)), dipole_axis_(dipole_axis) {
    if (positions_.empty()) {
        throw std::invalid_argument("AtomConfiguration: at least one atom is required");
    }
    if (std::abs(norm(dipole_axis_) - 1.0) > 1e-12) {
        throw std::invalid_argument("AtomConfiguration: dipole axis must have unit norm");
    }
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        for (std::size_t j = i + 1; j < positions_.size(); ++j) {
            if (!(distance(positions_[i], positions_[j]) > xi_min)) {
                std::ostringstream msg;
                msg << "AtomConfiguration: atoms " << i << " and " << j
                    << " are closer than xi_min = " << xi_min;
                throw std::invalid_argument(msg.str());
            }
        }
    }
}

double AtomConfiguration::mean_pair_distance() const {
    const std::size_t n = positions_.size();
    if (n < 2) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            sum += distance(positions_[i], positions_[j]);
        }
    }
    return sum / static_cast<double>(n * (n - 1) / 2);
}

double AtomConfiguration::min_pair_distance() const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        for (std::size_t j = i + 1; j < positions_.size(); ++j) {
            best = std::min(best, distance(positions_[i], positions_[j]));
        }
    }
    return best;
}

double AtomConfiguration::bounding_radius() const {
    Vec3 centroid{0.0, 0.0, 0.0};
    for (const auto& p : positions_) {
        for (int k = 0; k < 3; ++k) centroid[k] += p[k];
    }
    for (int k = 0; k < 3; ++k) centroid[k] /= static_cast<double>(positions_.size());
    double r = 0.0;
    for (const auto& p : positions_) r = std::max(r, distance(p, centroid));
    return r;
}

double PairGeometry::cos2_alpha() const {
    const double c = std::cos(alpha);
    return c * c;
}

PairGeometry pair_geometry(const AtomConfiguration& config, std::size_t i,
                           std::size_t j) {
    if (i == j) {
        throw std::invalid_argument("pair_geometry: indices must differ");
    }
    const Vec3& a = config.position(i);
    const Vec3& b = config.position(j);
    const Vec3 rel{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
    const double xi = norm(rel);
    const Vec3& d = config.dipole_axis();
    // Only cos^2 enters the couplings; folding onto [0, pi/2] makes the result
    // independent of the pair orientation.
    const double cos_alpha =
        std::min(std::abs(rel[0] * d[0] + rel[1] * d[1] + rel[2] * d[2]) / xi, 1.0);
    return {xi, std::acos(cos_alpha)};
}

SampledConfiguration sample_configuration_with_container(
    std::size_t n_atoms, double k0R, std::uint64_t rng_seed,
    const SamplingOptions& options) {
    if (n_atoms < 2) {
        throw std::invalid_argument("sample_configuration: n_atoms must be at least 2");
    }
    if (!(k0R > options.xi_min) || !(options.xi_min > 0.0)) {
        throw std::invalid_argument(
            "sample_configuration: require k0R > xi_min > 0");
    }

    std::mt19937_64 rng(splitmix64(rng_seed));
    std::vector<Vec3> positions(n_atoms);
    for (std::uint64_t attempt = 0; attempt < options.max_redraws; ++attempt) {
        for (auto& p : positions) p = uniform_in_unit_ball(rng);

        double sum = 0.0;
        double closest = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n_atoms; ++i) {
            for (std::size_t j = i + 1; j < n_atoms; ++j) {
                const double d = distance(positions[i], positions[j]);
                sum += d;
                closest = std::min(closest, d);
            }
        }
        const double mean = sum / static_cast<double>(n_atoms * (n_atoms - 1) / 2);
        if (!(mean > 0.0)) continue;
        const double scale = k0R / mean;
        if (!(closest * scale > options.xi_min)) continue;

        for (auto& p : positions) {
            for (auto& c : p) c *= scale;
        }
        AtomConfiguration config(positions, options.dipole_axis, options.xi_min);
        return {std::move(config), scale};
    }

    std::ostringstream msg;
    msg << "sample_configuration: no configuration with all separations above xi_min = "
        << options.xi_min << " after " << options.max_redraws
        << " redraws (k0R = " << k0R << " is too small)";
    throw SamplingError(msg.str());
}

AtomConfiguration sample_configuration(std::size_t n_atoms, double k0R,
                                       std::uint64_t rng_seed,
                                       const SamplingOptions& options) {
    return sample_configuration_with_container(n_atoms, k0R, rng_seed, options).config;
}

void write_configuration(std::ostream& out, const AtomConfiguration& config,
                         double k0R, std::uint64_t seed) {
    out << "# k0R=" << std::setprecision(17) << k0R << " seed=" << seed << '\n';
    for (const auto& p : config.positions()) {
        out << std::setprecision(17) << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
    }
}

}  // namespace superrad
