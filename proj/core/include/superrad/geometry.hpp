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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace superrad {

using Vec3 = std::array<double, 3>;

/// Default lower bound on pair separations in units of 1/k0. Roughly k0*a0
/// for an optical transition around 500 nm.
inline constexpr double kDefaultXiMin = 6.6e-4;

/// Thrown when no configuration satisfying the distance cutoff is found
/// within the allowed number of redraws.
class SamplingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/**
 * N point-like atoms at fixed positions sharing one dipole axis.
 *
 * Positions are stored premultiplied by the transition wavenumber k0, so the
 * separation between two atoms is directly the dimensionless xi = k0 r.
 */
class AtomConfiguration {
  public:
    /// Validates the invariants (N >= 1, unit dipole axis, all separations
    /// above `xi_min`) and throws std::invalid_argument otherwise.
    AtomConfiguration(std::vector<Vec3> positions,
                      Vec3 dipole_axis = {0.0, 0.0, 1.0},
                      double xi_min = 0.0);

    std::size_t size() const { return positions_.size(); }
    const std::vector<Vec3>& positions() const { return positions_; }
    const Vec3& position(std::size_t i) const { return positions_.at(i); }
    const Vec3& dipole_axis() const { return dipole_axis_; }

    /// Mean over all N(N-1)/2 pair separations (0 for a single atom).
    double mean_pair_distance() const;
    double min_pair_distance() const;
    /// Largest distance of an atom from the centroid.
    double bounding_radius() const;

  private:
    std::vector<Vec3> positions_;
    Vec3 dipole_axis_;
};

struct PairGeometry {
    double xi;     ///< k0 |r_i - r_j|
    double alpha;  ///< angle between the pair axis and the dipole axis, in [0, pi/2]

    double cos2_alpha() const;
};

PairGeometry pair_geometry(const AtomConfiguration& config, std::size_t i,
                           std::size_t j);

struct SamplingOptions {
    double xi_min = kDefaultXiMin;
    std::uint64_t max_redraws = 1'000'000;
    Vec3 dipole_axis = {0.0, 0.0, 1.0};
};

/**
 * Draws `n_atoms` positions uniformly in a ball and rescales them so that the
 * mean pair separation equals `k0R`. Configurations with any separation at or
 * below `options.xi_min` are discarded as a whole and redrawn.
 *
 * The result is a pure function of the arguments.
 */
AtomConfiguration sample_configuration(std::size_t n_atoms, double k0R,
                                       std::uint64_t rng_seed,
                                       const SamplingOptions& options = {});

/// A sampled configuration together with the radius of its spherical
/// container after rescaling.
struct SampledConfiguration {
    AtomConfiguration config;
    double container_radius;
};
SampledConfiguration sample_configuration_with_container(
    std::size_t n_atoms, double k0R, std::uint64_t rng_seed,
    const SamplingOptions& options = {});

/// One position per line, three columns, preceded by `# k0R=<v> seed=<s>`.
void write_configuration(std::ostream& out, const AtomConfiguration& config,
                         double k0R, std::uint64_t seed);

}  // namespace superrad
