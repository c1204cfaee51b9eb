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

#include "superrad/liouvillian.hpp"

#include <stdexcept>

#include "superrad/sector_operators.hpp"

namespace superrad {

BlockLayout::BlockLayout(std::size_t n_atoms) {
    if (n_atoms == 0 || n_atoms > kMaxAtoms) {
        throw std::invalid_argument("BlockLayout: number of atoms out of range");
    }
    offsets_.push_back(0);
    for (std::size_t n = 0; n <= n_atoms; ++n) {
        const auto d = static_cast<Eigen::Index>(
            binomial(static_cast<unsigned>(n_atoms), static_cast<unsigned>(n)));
        dims_.push_back(d);
        offsets_.push_back(offsets_.back() + d * d);
    }
}

Eigen::VectorXcd BlockLayout::vectorize(const BlockDensityMatrix& rho) const {
    if (rho.n_atoms() != n_atoms()) {
        throw std::invalid_argument("vectorize: state and layout sizes differ");
    }
    Eigen::VectorXcd vec(size());
    for (std::size_t n = 0; n <= n_atoms(); ++n) {
        const auto& b = rho.block(n);
        for (Eigen::Index r = 0; r < dims_[n]; ++r) {
            for (Eigen::Index c = 0; c < dims_[n]; ++c) vec(slot(n, r, c)) = b(r, c);
        }
    }
    return vec;
}

BlockDensityMatrix BlockLayout::unvectorize(const Eigen::Ref<const Eigen::VectorXcd>& vec) const {
    if (vec.size() != size()) {
        throw std::invalid_argument("unvectorize: vector length does not match layout");
    }
    BlockDensityMatrix rho(n_atoms());
    for (std::size_t n = 0; n <= n_atoms(); ++n) {
        auto& b = rho.block(n);
        for (Eigen::Index r = 0; r < dims_[n]; ++r) {
            for (Eigen::Index c = 0; c < dims_[n]; ++c) b(r, c) = vec(slot(n, r, c));
        }
    }
    return rho;
}

LiouvillianMatrix assemble(const CouplingSet& couplings, std::size_t n_atoms) {
    if (static_cast<std::size_t>(couplings.gamma.rows()) != n_atoms ||
        couplings.gamma.cols() != couplings.gamma.rows() ||
        couplings.f.rows() != couplings.gamma.rows() ||
        couplings.f.cols() != couplings.gamma.rows()) {
        throw std::invalid_argument("assemble: coupling matrices must be N x N");
    }
    const SectorBasis basis(n_atoms);
    const SectorOperators ops = build_sector_operators(basis, couplings);
    LiouvillianMatrix gen{BlockLayout(n_atoms), {}};
    const BlockLayout& layout = gen.layout;
    gen.a = Eigen::MatrixXcd::Zero(layout.size(), layout.size());
    const Complex i_unit(0.0, 1.0);

    for (std::size_t n = 0; n <= n_atoms; ++n) {
        const Eigen::Index d = layout.block_dim(n);
        // Non-Hermitian effective generator: rho -> k rho + rho k^dagger.
        const Eigen::MatrixXcd k =
            -i_unit * ops.hamiltonian[n].cast<Complex>() - 0.5 * ops.decay[n].cast<Complex>();
        for (Eigen::Index a = 0; a < d; ++a) {
            for (Eigen::Index b = 0; b < d; ++b) {
                const Eigen::Index out = layout.slot(n, a, b);
                for (Eigen::Index c = 0; c < d; ++c) {
                    gen.a(out, layout.slot(n, c, b)) += k(a, c);
                    gen.a(out, layout.slot(n, a, c)) += std::conj(k(b, c));
                }
            }
        }
    }

    // Feeding of block n from block n+1 by the jump terms gamma_ij s-_j rho s+_i.
    for (std::size_t n = 0; n < n_atoms; ++n) {
        const auto& lower = basis.sector(n);
        for (std::size_t a = 0; a < lower.size(); ++a) {
            for (std::size_t b = 0; b < lower.size(); ++b) {
                const Eigen::Index out = layout.slot(n, static_cast<Eigen::Index>(a),
                                                     static_cast<Eigen::Index>(b));
                for (std::size_t j = 0; j < n_atoms; ++j) {
                    const BasisState bj = basis.atom_bit(j);
                    if (lower[a] & bj) continue;
                    const auto p = static_cast<Eigen::Index>(basis.index_in_sector(lower[a] | bj));
                    for (std::size_t i = 0; i < n_atoms; ++i) {
                        const BasisState bi = basis.atom_bit(i);
                        if (lower[b] & bi) continue;
                        const auto q =
                            static_cast<Eigen::Index>(basis.index_in_sector(lower[b] | bi));
                        gen.a(out, layout.slot(n + 1, p, q)) +=
                            couplings.gamma(static_cast<Eigen::Index>(i),
                                            static_cast<Eigen::Index>(j));
                    }
                }
            }
        }
    }
    return gen;
}

BlockDensityMatrix apply(const LiouvillianMatrix& generator, const BlockDensityMatrix& rho) {
    if (rho.n_atoms() != generator.n_atoms()) {
        throw std::invalid_argument("apply: state and generator sizes differ");
    }
    const Eigen::VectorXcd vec = generator.layout.vectorize(rho);
    return generator.layout.unvectorize(generator.a * vec);
}

}  // namespace superrad
