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

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Core>

#include "superrad/couplings.hpp"

namespace superrad {

using Complex = std::complex<double>;

/// Product-basis state of N two-level atoms as a bit string. Atom 0 (the
/// first atom) is the most significant bit; a set bit means "excited".
using BasisState = std::uint32_t;

inline constexpr std::size_t kMaxAtoms = 12;

std::uint64_t binomial(unsigned n, unsigned k);

/**
 * Partition of the 2^N product basis into excitation-number sectors.
 *
 * Within sector n the states are the N-bit strings with n ones in ascending
 * lexicographic (equivalently, integer) order.
 */
class SectorBasis {
  public:
    explicit SectorBasis(std::size_t n_atoms);

    std::size_t n_atoms() const { return n_atoms_; }
    std::size_t n_sectors() const { return sectors_.size(); }
    std::size_t sector_dim(std::size_t n) const { return sectors_.at(n).size(); }
    const std::vector<BasisState>& sector(std::size_t n) const { return sectors_.at(n); }

    /// Position of `state` inside its own sector.
    std::size_t index_in_sector(BasisState state) const { return index_[state]; }
    static int excitations(BasisState state);

    /// Bit mask of atom i.
    BasisState atom_bit(std::size_t i) const {
        return BasisState{1} << (n_atoms_ - 1 - i);
    }

  private:
    std::size_t n_atoms_;
    std::vector<std::vector<BasisState>> sectors_;
    std::vector<std::size_t> index_;
};

/**
 * Density matrix with no coherences between different excitation numbers.
 * Block n is the C(N,n) x C(N,n) restriction to sector n.
 */
class BlockDensityMatrix {
  public:
    /// All blocks zero.
    explicit BlockDensityMatrix(std::size_t n_atoms);

    std::size_t n_atoms() const { return blocks_.size() - 1; }
    std::size_t n_blocks() const { return blocks_.size(); }
    Eigen::MatrixXcd& block(std::size_t n) { return blocks_.at(n); }
    const Eigen::MatrixXcd& block(std::size_t n) const { return blocks_.at(n); }

    /// Number of stored complex entries, sum_n C(N,n)^2 = C(2N,N).
    std::size_t stored_entries() const;
    /// Highest sector with a nonzero entry, or -1 if the matrix is zero.
    int highest_occupied_sector() const;

    Complex trace() const;
    double max_hermiticity_error() const;
    /// Smallest eigenvalue over all blocks of the Hermitian part.
    double min_eigenvalue() const;
    double frobenius_norm() const;
    /// Expectation value of the number of excited atoms.
    double mean_excitation() const;

    /// Full 2^N x 2^N matrix in the integer-ordered product basis.
    Eigen::MatrixXcd to_dense() const;
    /// Inverse of to_dense; entries outside the blocks are dropped.
    static BlockDensityMatrix from_dense(const Eigen::MatrixXcd& dense);

    BlockDensityMatrix& operator+=(const BlockDensityMatrix& other);
    BlockDensityMatrix& operator-=(const BlockDensityMatrix& other);
    BlockDensityMatrix& operator*=(Complex factor);

  private:
    std::vector<Eigen::MatrixXcd> blocks_;
};

BlockDensityMatrix ground_state(std::size_t n_atoms);
BlockDensityMatrix fully_excited_state(std::size_t n_atoms);

/// (|g e g> - |g g e>)/sqrt(2) for three atoms: dark under collective decay.
BlockDensityMatrix subradiant_state(std::size_t n_atoms = 3);

/// The dissipative part of the generator applied to `rho`.
BlockDensityMatrix dissipator(const BlockDensityMatrix& rho, const CouplingSet& couplings);

/// Frobenius norm of dissipator(rho); zero exactly for dark states.
double darkness_residual(const BlockDensityMatrix& rho, const CouplingSet& couplings);

/// Writes `n=<k>` followed by the rows of each block as `re+imj` tokens.
void write_state(std::ostream& out, const BlockDensityMatrix& rho);

}  // namespace superrad
