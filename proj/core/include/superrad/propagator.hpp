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

#include <functional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "superrad/liouvillian.hpp"
#include "superrad/state.hpp"

namespace superrad {

class PropagationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Sampling times in units of 1/gamma_0. Always starts at 0 and is strictly
/// increasing.
class TimeGrid {
  public:
    enum class Spacing { uniform, logarithmic_after_t1 };

    /// `n_points` equally spaced times on [0, t_max].
    static TimeGrid uniform(double t_max, std::size_t n_points);

    /// `n_uniform` equally spaced times on [0, t1] followed by a logarithmic
    /// progression up to `t_max` with `points_per_decade` points per decade.
    static TimeGrid log_after(double t1, std::size_t n_uniform, double t_max,
                              std::size_t points_per_decade);

    /// Arbitrary times; validated. The leading equally spaced run is detected
    /// and shares one step propagator.
    static TimeGrid from_points(std::vector<double> points);

    /// 2000 points on [0, 10].
    static TimeGrid superradiance_default();
    /// 200 points on [0, 1], then 40 points per decade up to 1e5.
    static TimeGrid subradiance_default();

    const std::vector<double>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    double operator[](std::size_t k) const { return points_[k]; }
    double back() const { return points_.back(); }
    Spacing spacing() const { return spacing_; }

    /// Number of leading points that are equally spaced with step `step()`.
    std::size_t uniform_count() const { return uniform_count_; }
    double step() const { return step_; }

  private:
    TimeGrid(std::vector<double> points, Spacing spacing, std::size_t uniform_count,
             double step);

    std::vector<double> points_;
    Spacing spacing_;
    std::size_t uniform_count_;
    double step_;
};

/**
 * Real coordinates of a Hermitian block-supported matrix restricted to the
 * sectors 0..top. Per block: the diagonal entry for a == b, and the real and
 * imaginary parts of entry (a, b) for a < b, in row-major order of the upper
 * triangle. Block n occupies the same slots as in the complex layout.
 */
class HermitianCoordinates {
  public:
    HermitianCoordinates(std::size_t n_atoms, std::size_t top_sector);

    std::size_t n_atoms() const { return layout_.n_atoms(); }
    std::size_t top_sector() const { return top_; }
    Eigen::Index size() const { return layout_.prefix_size(top_); }
    const BlockLayout& layout() const { return layout_; }

    /// Rejects states with weight above the top sector.
    Eigen::VectorXd encode(const BlockDensityMatrix& rho) const;
    BlockDensityMatrix decode(const Eigen::Ref<const Eigen::VectorXd>& x) const;

    /// Real matrix R with dx/dt = R x, equivalent to the complex generator on
    /// Hermitian states.
    Eigen::MatrixXd real_generator(const LiouvillianMatrix& generator) const;

    double trace(const Eigen::Ref<const Eigen::VectorXd>& x) const;
    /// Sum of |rho_ab| over a != b.
    double coherence_l1(const Eigen::Ref<const Eigen::VectorXd>& x) const;
    /// Weights w with Tr(op rho) = w . x for a block-diagonal real symmetric op.
    Eigen::VectorXd linear_functional(const std::vector<Eigen::MatrixXd>& blocks) const;

  private:
    BlockLayout layout_;
    std::size_t top_;
};

/**
 * exp(A t) acting on block-supported Hermitian states.
 *
 * The generator is reduced to the sectors that the initial state occupies
 * (lower sectors never feed higher ones) and written in real coordinates.
 * Step propagators exp(R h) come from Pade scaling and squaring and are cached
 * per distinct step size.
 */
class Propagator {
  public:
    using Visitor = std::function<void(std::size_t index, double t,
                                       const Eigen::Ref<const Eigen::VectorXd>& x)>;

    Propagator(const LiouvillianMatrix& generator, std::size_t top_sector);

    const HermitianCoordinates& coordinates() const { return coords_; }
    const Eigen::MatrixXd& real_generator() const { return generator_; }

    /// Calls `visit` with the state at every grid point, in order.
    void propagate(const Eigen::Ref<const Eigen::VectorXd>& initial, const TimeGrid& grid,
                   const Visitor& visit) const;

    /// exp(R h) for a single step h >= 0.
    Eigen::MatrixXd step_propagator(double h) const;

  private:
    HermitianCoordinates coords_;
    Eigen::MatrixXd generator_;
};

/// States at every grid point; the first entry is `initial` itself.
std::vector<BlockDensityMatrix> evolve(const LiouvillianMatrix& generator,
                                       const BlockDensityMatrix& initial,
                                       const TimeGrid& grid);

}  // namespace superrad
