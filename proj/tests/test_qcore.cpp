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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qmm/qcore.hpp"
#include "qmm/random.hpp"

using namespace qmm;

TEST_CASE("tensor uses big-endian composite indexing") {
    const Ket k = tensor(Ket::basis(2, 1), Ket::basis(3, 2));
    REQUIRE(k.dim() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(k[i] == cplx(i == 5 ? 1.0 : 0.0));
    }

    const ComplexMatrix x = gates::pauli_x();
    const ComplexMatrix z = gates::pauli_z();
    const ComplexMatrix xz = tensor(x, z);
    // (X ⊗ Z)|0 1⟩ = -|1 1⟩
    const Ket out = xz * tensor(Ket::basis(2, 0), Ket::basis(2, 1));
    CHECK(out[3] == cplx(-1.0));
}

TEST_CASE("mixed product property of tensor") {
    random::Engine rng(7);
    const ComplexMatrix a = random::gaussian_matrix(2, 2, rng);
    const ComplexMatrix b = random::gaussian_matrix(3, 3, rng);
    const ComplexMatrix c = random::gaussian_matrix(2, 2, rng);
    const ComplexMatrix d = random::gaussian_matrix(3, 3, rng);
    const ComplexMatrix lhs = tensor(a, b) * tensor(c, d);
    const ComplexMatrix rhs = tensor(a * c, b * d);
    CHECK(lhs.max_abs_diff(rhs) < 1e-12);
}

TEST_CASE("matrix arithmetic and shape errors") {
    const ComplexMatrix a{{1.0, 2.0}, {3.0, 4.0}};
    const ComplexMatrix b{{0.0, cplx(0, 1)}, {1.0, 0.0}};
    CHECK((a + b)(0, 1) == cplx(2.0, 1.0));
    CHECK((a - a).max_abs() == 0.0);
    CHECK((a * b)(0, 0) == cplx(2.0));
    CHECK(a.trace() == cplx(5.0));
    CHECK(b.dagger()(1, 0) == cplx(0, -1));
    CHECK_THROWS_AS(a + ComplexMatrix(3, 3), DimensionError);
    CHECK_THROWS_AS(a * ComplexMatrix(3, 1), DimensionError);
    CHECK_THROWS_AS((void)ComplexMatrix(2, 3).trace(), DimensionError);
    CHECK_THROWS_AS(ComplexMatrix(2, 2, {1.0}), DimensionError);
    CHECK_THROWS_AS(ComplexMatrix(1, 1, {cplx(std::nan(""), 0)}), ValidationError);
    CHECK_THROWS_AS((ComplexMatrix{{1.0, 2.0}, {3.0}}), DimensionError);
}

TEST_CASE("kets") {
    const Ket k{3.0, cplx(0, 4.0)};
    CHECK(k.norm() == doctest::Approx(5.0));
    CHECK(k.normalized().norm() == doctest::Approx(1.0));
    CHECK(inner(k, k) == cplx(25.0));
    CHECK_THROWS_AS(Ket::basis(2, 2), DimensionError);
    CHECK_THROWS_AS((void)Ket({0.0, 0.0}).normalized(), ValidationError);
    CHECK_THROWS_AS(inner(Ket{1.0}, Ket{1.0, 0.0}), DimensionError);
    const ComplexMatrix p = Ket{kInvSqrt2, kInvSqrt2}.projector();
    CHECK((p * p).max_abs_diff(p) < 1e-15);
    CHECK(matrix_element(Ket::basis(2, 0), gates::pauli_x(), Ket::basis(2, 1)) ==
          cplx(1.0));
}

TEST_CASE("partial trace of a product state returns the factors") {
    random::Engine rng(11);
    const ComplexMatrix r0 = random::density(2, rng);
    const ComplexMatrix r1 = random::density(3, rng);
    const ComplexMatrix r2 = random::density(2, rng);
    const ComplexMatrix full = tensor(tensor(r0, r1), r2);
    const HilbertLayout layout{2, 3, 2};
    CHECK(layout.total() == 12);
    CHECK(partial_trace(full, layout, {0}).max_abs_diff(r0) < 1e-14);
    CHECK(partial_trace(full, layout, {1}).max_abs_diff(r1) < 1e-14);
    CHECK(partial_trace(full, layout, {2}).max_abs_diff(r2) < 1e-14);
    CHECK(partial_trace(full, layout, {0, 2}).max_abs_diff(tensor(r0, r2)) < 1e-14);
    CHECK(partial_trace(full, layout, {}).rows() == 1);
    CHECK(std::abs(partial_trace(full, layout, {})(0, 0) - 1.0) < 1e-14);
    CHECK_THROWS_AS(partial_trace(full, layout, {3}), DimensionError);
    CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(5), layout, {0}),
                    DimensionError);
    CHECK_THROWS_AS(HilbertLayout({2, 0}), DimensionError);
}

TEST_CASE("partial trace of a Bell state is maximally mixed") {
    const Ket bell{kInvSqrt2, 0.0, 0.0, kInvSqrt2};
    const ComplexMatrix reduced = partial_trace(bell.projector(), {2, 2}, {0});
    CHECK(reduced.max_abs_diff(0.5 * ComplexMatrix::identity(2)) < 1e-15);
}

TEST_CASE("Hermitian eigenvalues") {
    const auto ex = hermitian_eigenvalues(gates::pauli_y());
    REQUIRE(ex.size() == 2);
    CHECK(ex[0] == doctest::Approx(-1.0));
    CHECK(ex[1] == doctest::Approx(1.0));

    const ComplexMatrix m{{2.0, cplx(1, 1), 0.0},
                          {cplx(1, -1), 3.0, cplx(0, 2)},
                          {0.0, cplx(0, -2), 1.0}};
    const auto e = hermitian_eigenvalues(m);
    double sum = 0.0;
    for (double v : e) {
        sum += v;
    }
    CHECK(sum == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(std::is_sorted(e.begin(), e.end()));
    CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}),
                    ValidationError);
}

TEST_CASE("property: eigenvalues of U diag(λ) U† are λ") {
    random::Engine rng(2026);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t dim = 2 + static_cast<std::size_t>(trial % 5);
        const ComplexMatrix u = random::unitary(dim, rng);
        ComplexMatrix diag(dim, dim);
        std::vector<double> lambda(dim);
        std::uniform_real_distribution<double> dist(-2.0, 2.0);
        for (std::size_t i = 0; i < dim; ++i) {
            lambda[i] = dist(rng);
            diag(i, i) = lambda[i];
        }
        std::sort(lambda.begin(), lambda.end());
        const auto e = hermitian_eigenvalues(u * diag * u.dagger());
        for (std::size_t i = 0; i < dim; ++i) {
            CHECK(std::abs(e[i] - lambda[i]) < 1e-10);
        }
    }
}

TEST_CASE("unitarity and orthonormality") {
    CHECK(check_unitary(gates::hadamard()).pass);
    const auto bad = check_unitary(ComplexMatrix{{1.0, 0.0}, {0.0, 2.0}});
    CHECK_FALSE(bad.pass);
    CHECK(bad.deviation == doctest::Approx(3.0));

    random::Engine rng(3);
    const auto basis = random::orthonormal_basis(4, rng);
    CHECK(is_orthonormal_basis(basis, 4));
    CHECK(orthonormality_deviation(basis) < 1e-12);
    CHECK_FALSE(is_orthonormal_basis(basis, 3));
    std::vector<Ket> skew{Ket{1.0, 0.0}, Ket{kInvSqrt2, kInvSqrt2}};
    CHECK_FALSE(is_orthonormal_basis(skew, 2));
}

TEST_CASE("density validation") {
    CHECK_NOTHROW(require_density(0.5 * ComplexMatrix::identity(2)));
    CHECK_THROWS_AS(require_density(ComplexMatrix::identity(2)), ValidationError);
    CHECK_THROWS_AS(require_density(ComplexMatrix{{1.5, 0.0}, {0.0, -0.5}}),
                    ValidationError);
    CHECK_THROWS_AS(require_density(ComplexMatrix{{0.5, 1.0}, {0.0, 0.5}}),
                    ValidationError);
    CHECK_THROWS_AS(require_density(ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("Pauli algebra") {
    using namespace gates;
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK((pauli_x() * pauli_x()).max_abs_diff(i2) == 0.0);
    CHECK((pauli_x() * pauli_y()).max_abs_diff(cplx(0, 1) * pauli_z()) == 0.0);
    CHECK((hadamard() * pauli_z() * hadamard()).max_abs_diff(pauli_x()) < 1e-15);
}
