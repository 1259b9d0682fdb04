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

#include <array>
#include <cmath>
#include <random>

#include "doctest.h"
#include "qmm/multimeter.hpp"
#include "qmm/povm.hpp"
#include "qmm/random.hpp"

using namespace qmm;

namespace {

Povm computational_povm(std::size_t dim) {
    std::vector<Effect> effects;
    for (std::size_t i = 0; i < dim; ++i) {
        effects.push_back({{i, 0, 0}, Ket::basis(dim, i).projector()});
    }
    return Povm(std::move(effects));
}

// Trine POVM: (2/3)|t_m⟩⟨t_m| with t_m at 120° on the real great circle.
Povm trine() {
    std::vector<Effect> effects;
    for (std::size_t m = 0; m < 3; ++m) {
        const double a = 2.0 * std::numbers::pi * static_cast<double>(m) / 3.0;
        const Ket t{std::cos(a / 2.0), std::sin(a / 2.0)};
        effects.push_back({{m, 0, 0}, (2.0 / 3.0) * t.projector()});
    }
    return Povm(std::move(effects));
}

} // namespace

TEST_CASE("validate_povm accepts projective and trine measurements") {
    const PovmReport proj = validate_povm(computational_povm(3));
    CHECK(proj.pass);
    CHECK(proj.completeness_deviation == 0.0);
    const PovmReport tr = validate_povm(trine());
    CHECK(tr.pass);
    CHECK(tr.completeness_deviation < 1e-15);
    REQUIRE(tr.min_eigenvalues.size() == 3);
    for (double v : tr.min_eigenvalues) {
        CHECK(std::abs(v) < 1e-15);
    }
}

TEST_CASE("validate_povm reports incompleteness, negativity and non-Hermiticity") {
    std::vector<Effect> partial{{{0, 0, 0}, Ket::basis(2, 0).projector()}};
    const PovmReport incomplete = validate_povm(Povm(partial));
    CHECK_FALSE(incomplete.pass);
    CHECK(incomplete.completeness_deviation == doctest::Approx(1.0));
    CHECK(incomplete.worst_row == 1);
    CHECK(incomplete.worst_col == 1);

    // Complete but one effect is indefinite.
    const ComplexMatrix z = gates::pauli_z();
    std::vector<Effect> indefinite{
        {{0, 0, 0}, 0.5 * (ComplexMatrix::identity(2) + 2.0 * z)},
        {{1, 0, 0}, 0.5 * (ComplexMatrix::identity(2) - 2.0 * z)}};
    const PovmReport neg = validate_povm(Povm(indefinite));
    CHECK_FALSE(neg.pass);
    CHECK(neg.completeness_deviation < 1e-15);
    CHECK(neg.min_eigenvalues[0] == doctest::Approx(-0.5));

    const ComplexMatrix skew{{0.0, 0.1}, {0.0, 0.0}};
    std::vector<Effect> nonherm{
        {{0, 0, 0}, Ket::basis(2, 0).projector() + skew},
        {{1, 0, 0}, Ket::basis(2, 1).projector() - skew}};
    const PovmReport nh = validate_povm(Povm(nonherm));
    CHECK_FALSE(nh.pass);
    CHECK(nh.hermiticity_deviations[0] > 0.0);

    // Within the 1e-10 tolerance.
    std::vector<Effect> nearly{
        {{0, 0, 0}, (1.0 + 5e-11) * Ket::basis(2, 0).projector()},
        {{1, 0, 0}, Ket::basis(2, 1).projector()}};
    CHECK(validate_povm(Povm(nearly)).pass);
}

TEST_CASE("Povm construction errors and lookup") {
    CHECK_THROWS_AS((void)Povm({}), DimensionError);
    std::vector<Effect> mixed{{{0, 0, 0}, ComplexMatrix::identity(2)},
                              {{1, 0, 0}, ComplexMatrix::identity(3)}};
    CHECK_THROWS_AS((void)Povm(mixed), DimensionError);
    const Povm p = trine();
    CHECK(p.at({2, 0, 0}).op.max_abs_diff(p[2].op) == 0.0);
    CHECK_THROWS_AS((void)p.at({5, 0, 0}), std::out_of_range);
}

TEST_CASE("Born probabilities") {
    const Povm t = trine();
    const auto probs = born_probabilities(t, Ket{1.0, 0.0}.projector());
    REQUIRE(probs.size() == 3);
    CHECK(probs[0] == doctest::Approx(2.0 / 3.0));
    CHECK(probs[1] == doctest::Approx(1.0 / 6.0));
    CHECK(probs[2] == doctest::Approx(1.0 / 6.0));

    CHECK_THROWS_AS(born_probabilities(t, (1.0 / 3.0) * ComplexMatrix::identity(3)),
                    DimensionError);
    CHECK_THROWS_AS(born_probabilities(t, ComplexMatrix::identity(2)),
                    ValidationError);
    std::vector<Effect> partial{{{0, 0, 0}, Ket::basis(2, 0).projector()}};
    CHECK_THROWS_AS(born_probabilities(Povm(partial), 0.5 * ComplexMatrix::identity(2)),
                    ValidationError);
}

TEST_CASE("sample_outcome follows the distribution and is deterministic") {
    const std::array<double, 4> probs{0.1, 0.0, 0.6, 0.3};
    std::array<std::size_t, 4> counts{};
    const std::size_t n = 200000;
    for (std::size_t t = 0; t < n; ++t) {
        counts[sample_outcome(probs, t)]++;
    }
    CHECK(counts[1] == 0);
    for (std::size_t i : {0u, 2u, 3u}) {
        const double f = static_cast<double>(counts[i]) / static_cast<double>(n);
        const double sigma = std::sqrt(probs[i] * (1 - probs[i]) / n);
        CHECK(std::abs(f - probs[i]) < 5 * sigma);
    }
    CHECK(sample_outcome(probs, 12345) == sample_outcome(probs, 12345));

    const std::array<double, 2> degenerate{0.0, 1.0};
    for (std::uint64_t s = 0; s < 100; ++s) {
        CHECK(sample_outcome(degenerate, s) == 1);
    }
    CHECK_THROWS(sample_outcome(std::span<const double>{}, 0));
    const std::array<double, 2> bad{0.7, 0.7};
    CHECK_THROWS_AS(sample_outcome(bad, 0), ValidationError);
    const std::array<double, 2> neg{-0.1, 1.1};
    CHECK_THROWS_AS(sample_outcome(neg, 0), ValidationError);
}

TEST_CASE("PureProgram") {
    CHECK_THROWS_AS(PureProgram({1.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(PureProgram({}), ValidationError);
    const PureProgram p({kInvSqrt2, cplx(0, kInvSqrt2)});
    const std::vector<Ket> basis{Ket{0.0, 1.0}, Ket{1.0, 0.0}};
    const Ket k = p.in_basis(basis);
    CHECK(k[0] == cplx(0, kInvSqrt2));
    CHECK(k[1] == cplx(kInvSqrt2));
    CHECK_THROWS_AS((void)p.in_basis(std::vector<Ket>{Ket{1.0}}), DimensionError);
}

TEST_CASE("spin-axis bank with a maximally mixed program is the six-outcome "
          "Pauli POVM") {
    const Processor p = spin_axis_bank();
    const ComplexMatrix rho_p = (1.0 / 3.0) * ComplexMatrix::identity(3);
    const auto data = computational_basis(2);
    const Povm povm = induced_povm_no_ancilla(p.unitaries(), p.program_basis(),
                                              data, rho_p);
    CHECK(validate_povm(povm).pass);

    const Ket up{1.0, 0.0}, down{0.0, 1.0};
    const Ket xp{kInvSqrt2, kInvSqrt2}, xm{kInvSqrt2, -kInvSqrt2};
    const Ket yp{kInvSqrt2, cplx(0, kInvSqrt2)}, ym{kInvSqrt2, cplx(0, -kInvSqrt2)};
    // Data outcome i and program outcome k: k = 0 z, 1 x, 2 y.
    const std::array<std::array<Ket, 2>, 3> expected{
        {{up, down}, {xp, xm}, {yp, ym}}};
    for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t i = 0; i < 2; ++i) {
            const ComplexMatrix want = (1.0 / 3.0) * expected[k][i].projector();
            CHECK(povm.at({i, 0, k}).op.max_abs_diff(want) < 1e-12);
        }
    }
}

TEST_CASE("matched construction equals the general one with P' = P") {
    random::Engine rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t dd = 2, da = 2, kk = 3;
        std::vector<ComplexMatrix> us;
        for (std::size_t k = 0; k < kk; ++k) {
            us.push_back(random::unitary(dd * da, rng));
        }
        const auto pb = random::orthonormal_basis(kk, rng);
        const auto db = random::orthonormal_basis(dd, rng);
        const auto ab = random::orthonormal_basis(da, rng);
        const ComplexMatrix ra = random::density(da, rng);
        const ComplexMatrix rp = random::density(kk, rng);
        const Povm g = induced_povm_general(us, pb, db, ab, pb, ra, rp);
        const Povm m = induced_povm_matched(us, pb, db, ab, ra, rp);
        REQUIRE(g.size() == m.size());
        for (std::size_t e = 0; e < g.size(); ++e) {
            CHECK(g[e].label == m[e].label);
            CHECK(g[e].op.max_abs_diff(m[e].op) < 1e-12);
        }
    }
}

TEST_CASE("property: induced POVMs reproduce the composite simulation") {
    random::Engine rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t dd = 2 + static_cast<std::size_t>(trial % 2);
        const std::size_t da = 2;
        const std::size_t kk = 2 + static_cast<std::size_t>((trial / 2) % 2);
        std::vector<ComplexMatrix> us;
        for (std::size_t k = 0; k < kk; ++k) {
            us.push_back(random::unitary(dd * da, rng));
        }
        const auto pb = random::orthonormal_basis(kk, rng);
        const auto pm = random::orthonormal_basis(kk, rng);
        const auto db = random::orthonormal_basis(dd, rng);
        const auto ab = random::orthonormal_basis(da, rng);
        const ComplexMatrix rd = random::density(dd, rng);
        const ComplexMatrix ra = random::density(da, rng);
        const ComplexMatrix rp = random::density(kk, rng);

        const Povm povm = induced_povm_general(us, pb, db, ab, pm, ra, rp);
        const PovmReport report = validate_povm(povm);
        CHECK(report.pass);
        const auto probs = born_probabilities(povm, rd);

        const Processor proc(us, pb, dd, da);
        const MeasurementModel meas(db, ab, pm);
        const OutcomeTable table = simulate(proc, meas, rd, ra, rp);
        REQUIRE(table.labels.size() == povm.size());
        for (std::size_t e = 0; e < povm.size(); ++e) {
            CHECK(table.labels[e] == povm[e].label);
            CHECK(std::abs(table.probabilities[e] - probs[e]) < 1e-10);
        }
    }
}

TEST_CASE("program contraction of a pure program") {
    random::Engine rng(17);
    const std::size_t dd = 2, kk = 3;
    std::vector<ComplexMatrix> us;
    for (std::size_t k = 0; k < kk; ++k) {
        us.push_back(random::unitary(dd, rng));
    }
    const auto pb = random::orthonormal_basis(kk, rng);
    const auto pm = random::orthonormal_basis(kk, rng);
    const auto db = random::orthonormal_basis(dd, rng);
    const Ket xi = random::pure_state(kk, rng);
    const PureProgram program({xi[0], xi[1], xi[2]});
    const ProgramContraction pc = program_contraction(us, program, pb, pm, db);
    REQUIRE(pc.operators.size() == kk);
    // Σ_k X_k† X_k = I.
    ComplexMatrix sum(dd, dd);
    for (const ComplexMatrix &x : pc.operators) {
        sum += x.dagger() * x;
    }
    CHECK(sum.max_abs_diff(ComplexMatrix::identity(dd)) < 1e-12);
    CHECK(validate_povm(pc.povm).pass);

    // Same effects as the general construction with a rank-one program.
    const Ket p_state = program.in_basis(pb);
    const Povm g = induced_povm_no_ancilla(us, pb, db, p_state.projector());
    const Povm general = induced_povm_general(us, pb, db, std::vector<Ket>{Ket{1.0}},
                                              pm, ComplexMatrix::identity(1),
                                              p_state.projector());
    for (std::size_t e = 0; e < general.size(); ++e) {
        CHECK(general[e].op.max_abs_diff(pc.povm[e].op) < 1e-12);
    }
    CHECK(g.size() == general.size());
}

TEST_CASE("induced POVM input validation") {
    const std::vector<ComplexMatrix> us{ComplexMatrix::identity(2),
                                        gates::pauli_x()};
    const auto b2 = computational_basis(2);
    const auto b3 = computational_basis(3);
    const ComplexMatrix rp = 0.5 * ComplexMatrix::identity(2);
    CHECK_NOTHROW(induced_povm_no_ancilla(us, b2, b2, rp));
    CHECK_THROWS_AS(induced_povm_no_ancilla(us, b3, b2, rp), ValidationError);
    CHECK_THROWS_AS(induced_povm_no_ancilla(us, b2, b2, ComplexMatrix::identity(3)),
                    DimensionError);
    CHECK_THROWS_AS(induced_povm_no_ancilla(us, b2, b2, ComplexMatrix::identity(2)),
                    ValidationError);
    const std::vector<ComplexMatrix> not_unitary{ComplexMatrix::identity(2),
                                                 2.0 * gates::pauli_x()};
    CHECK_THROWS_AS(induced_povm_no_ancilla(not_unitary, b2, b2, rp), ValidationError);
    const std::vector<Ket> skew{Ket{1.0, 0.0}, Ket{kInvSqrt2, kInvSqrt2}};
    CHECK_THROWS_AS(induced_povm_no_ancilla(us, b2, skew, rp), ValidationError);
}
