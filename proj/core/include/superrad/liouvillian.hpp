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

#include <vector>

#include <Eigen/Core>

#include "superrad/couplings.hpp"
#include "superrad/state.hpp"

namespace superrad {

/**
 * Bijection between block entries (n, row, col) and slots of the vectorized
 * state. Blocks are laid out in ascending n, row-major within a block.
 */
class BlockLayout {
  public:
    explicit BlockLayout(std::size_t n_atoms);

    std::size_t n_atoms() const { return dims_.size() - 1; }
    /// Total number of slots, C(2N, N).
    Eigen::Index size() const { return offsets_.back(); }
    Eigen::Index block_dim(std::size_t n) const { return dims_.at(n); }
    Eigen::Index block_offset(std::size_t n) const { return offsets_.at(n); }
    /// Number of leading slots covering blocks 0..n.
    Eigen::Index prefix_size(std::size_t n) const { return offsets_.at(n + 1); }

    Eigen::Index slot(std::size_t n, Eigen::Index row, Eigen::Index col) const {
        return offsets_[n] + row * dims_[n] + col;
    }

    Eigen::VectorXcd vectorize(const BlockDensityMatrix& rho) const;
    BlockDensityMatrix unvectorize(const Eigen::Ref<const Eigen::VectorXcd>& vec) const;

  private:
    std::vector<Eigen::Index> dims_;
    std::vector<Eigen::Index> offsets_;
};

/**
 * Matrix A of the linear system d(vec rho)/dt = A vec rho generated by the
 * dipole-dipole Hamiltonian and the collective dissipator.
 */
struct LiouvillianMatrix {
    BlockLayout layout;
    Eigen::MatrixXcd a;

    std::size_t n_atoms() const { return layout.n_atoms(); }
};

LiouvillianMatrix assemble(const CouplingSet& couplings, std::size_t n_atoms);

/// d rho / dt for the given state.
BlockDensityMatrix apply(const LiouvillianMatrix& generator, const BlockDensityMatrix& rho);

}  // namespace superrad
