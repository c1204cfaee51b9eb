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
 * Restrictions of the excitation-conserving operators to each sector.
 *
 *   hamiltonian[n] = sum_{i != j} f_ij      s+_i s-_j   on sector n
 *   decay[n]       = sum_{i,j}    gamma_ij  s+_i s-_j   on sector n
 *
 * and the lowering maps: lowering[n][j] is the C(N,n) x C(N,n+1) 0/1 matrix
 * of s-_j from sector n+1 to sector n.
 */
struct SectorOperators {
    std::vector<Eigen::MatrixXd> hamiltonian;
    std::vector<Eigen::MatrixXd> decay;
    std::vector<std::vector<Eigen::MatrixXd>> lowering;
    Eigen::MatrixXd gamma;

    std::size_t n_atoms() const { return decay.size() - 1; }

    /// sum_{i,j} gamma_ij s-_j rho s+_i, mapping block n+1 to block n.
    Eigen::MatrixXcd jump(std::size_t n, const Eigen::MatrixXcd& upper_block) const;
};

SectorOperators build_sector_operators(const SectorBasis& basis,
                                       const CouplingSet& couplings);

}  // namespace superrad
