// Copyright 2026 The QMM Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmm/random.hpp"

#include <cmath>

namespace qmm::random {

ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Engine &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<cplx> entries(rows * cols);
    for (cplx &e : entries) {
        const double re = normal(rng);
        const double im = normal(rng);
        e = {re, im};
    }
    return {rows, cols, std::move(entries)};
}

ComplexMatrix unitary(std::size_t dim, Engine &rng) {
    ComplexMatrix g = gaussian_matrix(dim, dim, rng);
    // Modified Gram-Schmidt on columns.
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            cplx proj = 0.0;
            for (std::size_t r = 0; r < dim; ++r) {
                proj += std::conj(g(r, prev)) * g(r, c);
            }
            for (std::size_t r = 0; r < dim; ++r) {
                g(r, c) -= proj * g(r, prev);
            }
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < dim; ++r) {
            norm += std::norm(g(r, c));
        }
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < dim; ++r) {
            g(r, c) /= norm;
        }
    }
    return g;
}

ComplexMatrix density(std::size_t dim, Engine &rng) {
    const ComplexMatrix g = gaussian_matrix(dim, dim, rng);
    ComplexMatrix rho = g * g.dagger();
    rho *= 1.0 / rho.trace().real();
    return rho;
}

Ket pure_state(std::size_t dim, Engine &rng) {
    const ComplexMatrix g = gaussian_matrix(dim, 1, rng);
    return Ket(std::vector<cplx>(g.entries().begin(), g.entries().end()))
        .normalized();
}

std::vector<Ket> orthonormal_basis(std::size_t dim, Engine &rng) {
    const ComplexMatrix u = unitary(dim, rng);
    std::vector<Ket> basis;
    basis.reserve(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        std::vector<cplx> col(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            col[r] = u(r, c);
        }
        basis.emplace_back(std::move(col));
    }
    return basis;
}

} // namespace qmm::random
