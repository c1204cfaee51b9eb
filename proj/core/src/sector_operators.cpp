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

#include "superrad/sector_operators.hpp"

#include <stdexcept>

namespace superrad {

SectorOperators build_sector_operators(const SectorBasis& basis,
                                       const CouplingSet& couplings) {
    const std::size_t n_atoms = basis.n_atoms();
    if (static_cast<std::size_t>(couplings.gamma.rows()) != n_atoms ||
        static_cast<std::size_t>(couplings.f.rows()) != n_atoms) {
        throw std::invalid_argument("build_sector_operators: coupling size mismatch");
    }

    SectorOperators ops;
    ops.gamma = couplings.gamma;
    ops.hamiltonian.resize(n_atoms + 1);
    ops.decay.resize(n_atoms + 1);
    ops.lowering.resize(n_atoms);

    for (std::size_t n = 0; n <= n_atoms; ++n) {
        const auto& states = basis.sector(n);
        const auto d = static_cast<Eigen::Index>(states.size());
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
        Eigen::MatrixXd g = Eigen::MatrixXd::Zero(d, d);
        for (Eigen::Index col = 0; col < d; ++col) {
            const BasisState s = states[static_cast<std::size_t>(col)];
            for (std::size_t j = 0; j < n_atoms; ++j) {
                const BasisState bj = basis.atom_bit(j);
                if (!(s & bj)) continue;
                for (std::size_t i = 0; i < n_atoms; ++i) {
                    const BasisState bi = basis.atom_bit(i);
                    const BasisState lowered = s & ~bj;
                    if (lowered & bi) continue;
                    const auto row =
                        static_cast<Eigen::Index>(basis.index_in_sector(lowered | bi));
                    const auto ii = static_cast<Eigen::Index>(i);
                    const auto jj = static_cast<Eigen::Index>(j);
                    g(row, col) += couplings.gamma(ii, jj);
                    if (i != j) h(row, col) += couplings.f(ii, jj);
                }
            }
        }
        ops.hamiltonian[n] = std::move(h);
        ops.decay[n] = std::move(g);
    }

    for (std::size_t n = 0; n < n_atoms; ++n) {
        const auto& lower = basis.sector(n);
        const auto& upper = basis.sector(n + 1);
        ops.lowering[n].resize(n_atoms);
        for (std::size_t j = 0; j < n_atoms; ++j) {
            Eigen::MatrixXd s = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(lower.size()),
                                                      static_cast<Eigen::Index>(upper.size()));
            const BasisState bj = basis.atom_bit(j);
            for (std::size_t a = 0; a < lower.size(); ++a) {
                if (lower[a] & bj) continue;
                s(static_cast<Eigen::Index>(a),
                  static_cast<Eigen::Index>(basis.index_in_sector(lower[a] | bj))) = 1.0;
            }
            ops.lowering[n][j] = std::move(s);
        }
    }
    return ops;
}

Eigen::MatrixXcd SectorOperators::jump(std::size_t n,
                                       const Eigen::MatrixXcd& upper_block) const {
    const std::size_t n_at = n_atoms();
    const auto& low = lowering.at(n);
    const auto d = low.front().rows();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    for (std::size_t j = 0; j < n_at; ++j) {
        const Eigen::MatrixXcd left = low[j].cast<Complex>() * upper_block;
        for (std::size_t i = 0; i < n_at; ++i) {
            const double g = gamma(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            if (g == 0.0) continue;
            out.noalias() += g * left * low[i].transpose().cast<Complex>();
        }
    }
    return out;
}

}  // namespace superrad
