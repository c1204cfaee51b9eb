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

#include "superrad/propagator.hpp"

#include <cmath>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

namespace superrad {

TimeGrid::TimeGrid(std::vector<double> points, Spacing spacing, std::size_t uniform_count,
                   double step)
    : points_(std::move(points)), spacing_(spacing), uniform_count_(uniform_count), step_(step) {
    if (points_.size() < 2) throw std::invalid_argument("TimeGrid: need at least two points");
    if (points_.front() != 0.0) throw std::invalid_argument("TimeGrid: must start at t = 0");
    for (std::size_t k = 1; k < points_.size(); ++k) {
        if (!(points_[k] > points_[k - 1]) || !std::isfinite(points_[k])) {
            throw std::invalid_argument("TimeGrid: times must be finite and strictly increasing");
        }
    }
}

TimeGrid TimeGrid::uniform(double t_max, std::size_t n_points) {
    if (n_points < 2 || !(t_max > 0.0)) {
        throw std::invalid_argument("TimeGrid::uniform: need t_max > 0 and at least 2 points");
    }
    const double denom = static_cast<double>(n_points - 1);
    std::vector<double> pts(n_points);
    for (std::size_t k = 0; k < n_points; ++k) pts[k] = t_max * static_cast<double>(k) / denom;
    return TimeGrid(std::move(pts), Spacing::uniform, n_points, t_max / denom);
}

TimeGrid TimeGrid::log_after(double t1, std::size_t n_uniform, double t_max,
                             std::size_t points_per_decade) {
    if (n_uniform < 2 || !(t1 > 0.0) || !(t_max > t1) || points_per_decade == 0) {
        throw std::invalid_argument("TimeGrid::log_after: invalid parameters");
    }
    TimeGrid head = uniform(t1, n_uniform);
    std::vector<double> pts = head.points_;
    const double ratio = std::pow(10.0, 1.0 / static_cast<double>(points_per_decade));
    for (std::size_t m = 1;; ++m) {
        const double t = t1 * std::pow(ratio, static_cast<double>(m));
        if (t >= t_max * (1.0 - 1e-12)) break;
        pts.push_back(t);
    }
    pts.push_back(t_max);
    return TimeGrid(std::move(pts), Spacing::logarithmic_after_t1, n_uniform, head.step_);
}

TimeGrid TimeGrid::from_points(std::vector<double> points) {
    if (points.size() < 2) throw std::invalid_argument("TimeGrid: need at least two points");
    const double step = points[1] - points[0];
    std::size_t run = 2;
    while (run < points.size() &&
           std::abs(points[run] - points[0] - step * static_cast<double>(run)) <=
               1e-12 * std::abs(points[run])) {
        ++run;
    }
    const Spacing spacing = run == points.size() ? Spacing::uniform : Spacing::logarithmic_after_t1;
    return TimeGrid(std::move(points), spacing, run, step);
}

TimeGrid TimeGrid::superradiance_default() { return uniform(10.0, 2000); }

TimeGrid TimeGrid::subradiance_default() { return log_after(1.0, 200, 1e5, 40); }

HermitianCoordinates::HermitianCoordinates(std::size_t n_atoms, std::size_t top_sector)
    : layout_(n_atoms), top_(top_sector) {
    if (top_sector > n_atoms) {
        throw std::invalid_argument("HermitianCoordinates: top sector exceeds number of atoms");
    }
}

Eigen::VectorXd HermitianCoordinates::encode(const BlockDensityMatrix& rho) const {
    if (rho.n_atoms() != n_atoms()) {
        throw std::invalid_argument("encode: state and coordinate sizes differ");
    }
    if (rho.highest_occupied_sector() > static_cast<int>(top_)) {
        throw std::invalid_argument("encode: state occupies sectors above the top sector");
    }
    Eigen::VectorXd x(size());
    for (std::size_t n = 0; n <= top_; ++n) {
        const auto& b = rho.block(n);
        const Eigen::Index d = layout_.block_dim(n);
        Eigen::Index k = layout_.block_offset(n);
        for (Eigen::Index a = 0; a < d; ++a) {
            x(k++) = b(a, a).real();
            for (Eigen::Index c = a + 1; c < d; ++c) {
                // Average the two triangles so that slightly non-Hermitian
                // input maps onto its Hermitian part.
                const Complex z = 0.5 * (b(a, c) + std::conj(b(c, a)));
                x(k++) = z.real();
                x(k++) = z.imag();
            }
        }
    }
    return x;
}

BlockDensityMatrix HermitianCoordinates::decode(const Eigen::Ref<const Eigen::VectorXd>& x) const {
    if (x.size() != size()) {
        throw std::invalid_argument("decode: coordinate vector has the wrong length");
    }
    BlockDensityMatrix rho(n_atoms());
    for (std::size_t n = 0; n <= top_; ++n) {
        auto& b = rho.block(n);
        const Eigen::Index d = layout_.block_dim(n);
        Eigen::Index k = layout_.block_offset(n);
        for (Eigen::Index a = 0; a < d; ++a) {
            b(a, a) = x(k++);
            for (Eigen::Index c = a + 1; c < d; ++c) {
                const Complex z(x(k), x(k + 1));
                k += 2;
                b(a, c) = z;
                b(c, a) = std::conj(z);
            }
        }
    }
    return rho;
}

Eigen::MatrixXd HermitianCoordinates::real_generator(const LiouvillianMatrix& generator) const {
    if (generator.n_atoms() != n_atoms()) {
        throw std::invalid_argument("real_generator: generator and coordinate sizes differ");
    }
    const Eigen::Index dim = size();
    const auto a = generator.a.topLeftCorner(dim, dim);
    Eigen::MatrixXd r(dim, dim);
    Eigen::VectorXcd image(dim);

    auto extract = [&](Eigen::Index column) {
        for (std::size_t n = 0; n <= top_; ++n) {
            const Eigen::Index d = layout_.block_dim(n);
            Eigen::Index k = layout_.block_offset(n);
            for (Eigen::Index p = 0; p < d; ++p) {
                r(k++, column) = image(layout_.slot(n, p, p)).real();
                for (Eigen::Index q = p + 1; q < d; ++q) {
                    const Complex z = image(layout_.slot(n, p, q));
                    r(k++, column) = z.real();
                    r(k++, column) = z.imag();
                }
            }
        }
    };

    const Complex i_unit(0.0, 1.0);
    for (std::size_t n = 0; n <= top_; ++n) {
        const Eigen::Index d = layout_.block_dim(n);
        Eigen::Index k = layout_.block_offset(n);
        for (Eigen::Index p = 0; p < d; ++p) {
            image = a.col(layout_.slot(n, p, p));
            extract(k++);
            for (Eigen::Index q = p + 1; q < d; ++q) {
                const auto upper = a.col(layout_.slot(n, p, q));
                const auto lower = a.col(layout_.slot(n, q, p));
                image = upper + lower;
                extract(k++);
                image = i_unit * (upper - lower);
                extract(k++);
            }
        }
    }
    return r;
}

double HermitianCoordinates::trace(const Eigen::Ref<const Eigen::VectorXd>& x) const {
    double t = 0.0;
    for (std::size_t n = 0; n <= top_; ++n) {
        const Eigen::Index d = layout_.block_dim(n);
        Eigen::Index k = layout_.block_offset(n);
        for (Eigen::Index a = 0; a < d; ++a) {
            t += x(k);
            k += 1 + 2 * (d - a - 1);
        }
    }
    return t;
}

double HermitianCoordinates::coherence_l1(const Eigen::Ref<const Eigen::VectorXd>& x) const {
    double sum = 0.0;
    for (std::size_t n = 0; n <= top_; ++n) {
        const Eigen::Index d = layout_.block_dim(n);
        Eigen::Index k = layout_.block_offset(n);
        for (Eigen::Index a = 0; a < d; ++a) {
            ++k;
            for (Eigen::Index c = a + 1; c < d; ++c) {
                sum += std::hypot(x(k), x(k + 1));
                k += 2;
            }
        }
    }
    return 2.0 * sum;
}

Eigen::VectorXd HermitianCoordinates::linear_functional(
    const std::vector<Eigen::MatrixXd>& blocks) const {
    if (blocks.size() < top_ + 1) {
        throw std::invalid_argument("linear_functional: missing operator blocks");
    }
    Eigen::VectorXd w = Eigen::VectorXd::Zero(size());
    for (std::size_t n = 0; n <= top_; ++n) {
        const Eigen::Index d = layout_.block_dim(n);
        const auto& op = blocks[n];
        if (op.rows() != d || op.cols() != d) {
            throw std::invalid_argument("linear_functional: operator block has the wrong size");
        }
        Eigen::Index k = layout_.block_offset(n);
        for (Eigen::Index a = 0; a < d; ++a) {
            w(k++) = op(a, a);
            for (Eigen::Index c = a + 1; c < d; ++c) {
                // Tr(op rho) picks op_ca rho_ac + op_ac rho_ca.
                w(k++) = op(c, a) + op(a, c);
                w(k++) = 0.0;
            }
        }
    }
    return w;
}

Propagator::Propagator(const LiouvillianMatrix& generator, std::size_t top_sector)
    : coords_(generator.n_atoms(), top_sector),
      generator_(coords_.real_generator(generator)) {}

Eigen::MatrixXd Propagator::step_propagator(double h) const {
    if (!(h >= 0.0) || !std::isfinite(h)) {
        throw PropagationError("step_propagator: invalid step size");
    }
    Eigen::MatrixXd p = (generator_ * h).exp();
    if (!p.allFinite()) {
        std::ostringstream msg;
        msg << "step_propagator: matrix exponential did not converge for step " << h;
        throw PropagationError(msg.str());
    }
    return p;
}

void Propagator::propagate(const Eigen::Ref<const Eigen::VectorXd>& initial,
                           const TimeGrid& grid, const Visitor& visit) const {
    if (initial.size() != coords_.size()) {
        throw std::invalid_argument("propagate: initial state has the wrong dimension");
    }
    Eigen::VectorXd x = initial;
    Eigen::VectorXd next(x.size());
    visit(0, 0.0, x);

    Eigen::MatrixXd uniform_step;
    if (grid.uniform_count() > 1) uniform_step = step_propagator(grid.step());

    Eigen::MatrixXd cached;
    double cached_h = -1.0;
    const auto& t = grid.points();
    for (std::size_t k = 1; k < t.size(); ++k) {
        const Eigen::MatrixXd* p = &uniform_step;
        if (k >= grid.uniform_count()) {
            const double h = t[k] - t[k - 1];
            if (std::abs(h - cached_h) > 1e-14 * h) {
                cached = step_propagator(h);
                cached_h = h;
            }
            p = &cached;
        }
        next.noalias() = (*p) * x;
        x.swap(next);
        visit(k, t[k], x);
    }
}

std::vector<BlockDensityMatrix> evolve(const LiouvillianMatrix& generator,
                                       const BlockDensityMatrix& initial,
                                       const TimeGrid& grid) {
    if (initial.n_atoms() != generator.n_atoms()) {
        throw std::invalid_argument("evolve: state and generator sizes differ");
    }
    const int top = std::max(initial.highest_occupied_sector(), 0);
    const Propagator prop(generator, static_cast<std::size_t>(top));
    const HermitianCoordinates& coords = prop.coordinates();

    std::vector<BlockDensityMatrix> out;
    out.reserve(grid.size());
    prop.propagate(coords.encode(initial), grid,
                   [&](std::size_t k, double, const Eigen::Ref<const Eigen::VectorXd>& x) {
                       if (k == 0) {
                           out.push_back(initial);
                       } else {
                           out.push_back(coords.decode(x));
                       }
                   });
    return out;
}

}  // namespace superrad
