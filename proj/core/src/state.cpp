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

#include "superrad/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "superrad/sector_operators.hpp"

namespace superrad {

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

SectorBasis::SectorBasis(std::size_t n_atoms)
    : n_atoms_(n_atoms), sectors_(n_atoms + 1), index_(std::size_t{1} << n_atoms) {
    if (n_atoms == 0 || n_atoms > kMaxAtoms) {
        throw std::invalid_argument("SectorBasis: number of atoms out of range");
    }
    const BasisState dim = BasisState{1} << n_atoms;
    for (BasisState s = 0; s < dim; ++s) {
        auto& sector = sectors_[static_cast<std::size_t>(excitations(s))];
        index_[s] = sector.size();
        sector.push_back(s);
    }
}

int SectorBasis::excitations(BasisState state) { return std::popcount(state); }

BlockDensityMatrix::BlockDensityMatrix(std::size_t n_atoms) {
    if (n_atoms == 0 || n_atoms > kMaxAtoms) {
        throw std::invalid_argument("BlockDensityMatrix: number of atoms out of range");
    }
    blocks_.reserve(n_atoms + 1);
    for (std::size_t n = 0; n <= n_atoms; ++n) {
        const auto d = static_cast<Eigen::Index>(
            binomial(static_cast<unsigned>(n_atoms), static_cast<unsigned>(n)));
        blocks_.push_back(Eigen::MatrixXcd::Zero(d, d));
    }
}

std::size_t BlockDensityMatrix::stored_entries() const {
    std::size_t total = 0;
    for (const auto& b : blocks_) total += static_cast<std::size_t>(b.size());
    return total;
}

int BlockDensityMatrix::highest_occupied_sector() const {
    for (int n = static_cast<int>(blocks_.size()) - 1; n >= 0; --n) {
        if (!blocks_[static_cast<std::size_t>(n)].isZero(0.0)) return n;
    }
    return -1;
}

Complex BlockDensityMatrix::trace() const {
    Complex t = 0.0;
    for (const auto& b : blocks_) t += b.trace();
    return t;
}

double BlockDensityMatrix::max_hermiticity_error() const {
    double err = 0.0;
    for (const auto& b : blocks_) {
        err = std::max(err, (b - b.adjoint()).cwiseAbs().maxCoeff());
    }
    return err;
}

double BlockDensityMatrix::min_eigenvalue() const {
    double lowest = std::numeric_limits<double>::infinity();
    for (const auto& b : blocks_) {
        const Eigen::MatrixXcd herm = 0.5 * (b + b.adjoint());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
        lowest = std::min(lowest, solver.eigenvalues().minCoeff());
    }
    return lowest;
}

double BlockDensityMatrix::frobenius_norm() const {
    double sq = 0.0;
    for (const auto& b : blocks_) sq += b.squaredNorm();
    return std::sqrt(sq);
}

double BlockDensityMatrix::mean_excitation() const {
    double total = 0.0;
    for (std::size_t n = 0; n < blocks_.size(); ++n) {
        total += static_cast<double>(n) * blocks_[n].trace().real();
    }
    return total;
}

Eigen::MatrixXcd BlockDensityMatrix::to_dense() const {
    const SectorBasis basis(n_atoms());
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_atoms());
    Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t n = 0; n < blocks_.size(); ++n) {
        const auto& states = basis.sector(n);
        for (std::size_t a = 0; a < states.size(); ++a) {
            for (std::size_t b = 0; b < states.size(); ++b) {
                dense(states[a], states[b]) =
                    blocks_[n](static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
            }
        }
    }
    return dense;
}

BlockDensityMatrix BlockDensityMatrix::from_dense(const Eigen::MatrixXcd& dense) {
    const auto dim = static_cast<std::size_t>(dense.rows());
    if (dense.cols() != dense.rows() || dim < 2 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("from_dense: expected a square 2^N matrix");
    }
    const auto n_atoms = static_cast<std::size_t>(std::countr_zero(dim));
    const SectorBasis basis(n_atoms);
    BlockDensityMatrix out(n_atoms);
    for (std::size_t n = 0; n <= n_atoms; ++n) {
        const auto& states = basis.sector(n);
        for (std::size_t a = 0; a < states.size(); ++a) {
            for (std::size_t b = 0; b < states.size(); ++b) {
                out.blocks_[n](static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                    dense(states[a], states[b]);
            }
        }
    }
    return out;
}

BlockDensityMatrix& BlockDensityMatrix::operator+=(const BlockDensityMatrix& other) {
    if (other.n_atoms() != n_atoms()) {
        throw std::invalid_argument("BlockDensityMatrix: size mismatch");
    }
    for (std::size_t n = 0; n < blocks_.size(); ++n) blocks_[n] += other.blocks_[n];
    return *this;
}

BlockDensityMatrix& BlockDensityMatrix::operator-=(const BlockDensityMatrix& other) {
    if (other.n_atoms() != n_atoms()) {
        throw std::invalid_argument("BlockDensityMatrix: size mismatch");
    }
    for (std::size_t n = 0; n < blocks_.size(); ++n) blocks_[n] -= other.blocks_[n];
    return *this;
}

BlockDensityMatrix& BlockDensityMatrix::operator*=(Complex factor) {
    for (auto& b : blocks_) b *= factor;
    return *this;
}

BlockDensityMatrix ground_state(std::size_t n_atoms) {
    BlockDensityMatrix rho(n_atoms);
    rho.block(0)(0, 0) = 1.0;
    return rho;
}

BlockDensityMatrix fully_excited_state(std::size_t n_atoms) {
    BlockDensityMatrix rho(n_atoms);
    rho.block(n_atoms)(0, 0) = 1.0;
    return rho;
}

BlockDensityMatrix subradiant_state(std::size_t n_atoms) {
    if (n_atoms != 3) {
        throw std::invalid_argument("subradiant_state: defined for three atoms only");
    }
    const SectorBasis basis(3);
    const auto second = static_cast<Eigen::Index>(basis.index_in_sector(basis.atom_bit(1)));
    const auto third = static_cast<Eigen::Index>(basis.index_in_sector(basis.atom_bit(2)));
    BlockDensityMatrix rho(3);
    auto& b = rho.block(1);
    b(second, second) = 0.5;
    b(third, third) = 0.5;
    b(second, third) = -0.5;
    b(third, second) = -0.5;
    return rho;
}

BlockDensityMatrix dissipator(const BlockDensityMatrix& rho, const CouplingSet& couplings) {
    const std::size_t n_atoms = rho.n_atoms();
    if (static_cast<std::size_t>(couplings.size()) != n_atoms) {
        throw std::invalid_argument("dissipator: coupling and state sizes differ");
    }
    const SectorBasis basis(n_atoms);
    const SectorOperators ops = build_sector_operators(basis, couplings);
    BlockDensityMatrix out(n_atoms);
    for (std::size_t n = 0; n <= n_atoms; ++n) {
        const Eigen::MatrixXcd g = ops.decay[n].cast<Complex>();
        out.block(n) = -0.5 * (g * rho.block(n) + rho.block(n) * g);
        if (n < n_atoms) out.block(n) += ops.jump(n, rho.block(n + 1));
    }
    return out;
}

double darkness_residual(const BlockDensityMatrix& rho, const CouplingSet& couplings) {
    return dissipator(rho, couplings).frobenius_norm();
}

void write_state(std::ostream& out, const BlockDensityMatrix& rho) {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::setprecision(17);
    for (std::size_t n = 0; n < rho.n_blocks(); ++n) {
        out << "n=" << n << '\n';
        const auto& b = rho.block(n);
        for (Eigen::Index r = 0; r < b.rows(); ++r) {
            for (Eigen::Index c = 0; c < b.cols(); ++c) {
                const Complex z = b(r, c);
                if (c) out << ' ';
                out << z.real() << (std::signbit(z.imag()) ? "-" : "+")
                    << std::abs(z.imag()) << 'j';
            }
            out << '\n';
        }
    }
    out.flags(flags);
    out.precision(precision);
}

}  // namespace superrad
