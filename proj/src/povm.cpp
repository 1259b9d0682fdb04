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

#include "qmm/povm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qmm/random.hpp"

namespace qmm {

namespace {

void require_basis(std::span<const Ket> basis, std::size_t dim,
                   const char *what) {
    if (!is_orthonormal_basis(basis, dim)) {
        throw ValidationError(std::string(what) +
                              ": not an orthonormal basis of dimension " +
                              std::to_string(dim));
    }
}

void require_unitaries(std::span<const ComplexMatrix> unitaries,
                       std::size_t dim) {
    if (unitaries.empty()) {
        throw ValidationError("processor needs at least one unitary");
    }
    for (std::size_t k = 0; k < unitaries.size(); ++k) {
        if (unitaries[k].rows() != dim || unitaries[k].cols() != dim) {
            throw DimensionError("unitary " + std::to_string(k) +
                                 " has wrong dimension, expected " +
                                 std::to_string(dim));
        }
        if (!check_unitary(unitaries[k]).pass) {
            throw ValidationError("operator " + std::to_string(k) +
                                  " is not unitary");
        }
    }
}

/// Tr_A[X (I ⊗ ρ_A)] for X on data ⊗ ancilla.
ComplexMatrix reduce_over_ancilla(const ComplexMatrix &x,
                                  const ComplexMatrix &rho_ancilla,
                                  std::size_t data_dim) {
    const HilbertLayout layout{data_dim, rho_ancilla.rows()};
    const ComplexMatrix lifted =
        tensor(ComplexMatrix::identity(data_dim), rho_ancilla);
    return partial_trace(x * lifted, layout, {0});
}

/// Common checks for the ancilla-bearing constructors. Returns the data
/// dimension.
std::size_t check_registers(std::span<const ComplexMatrix> unitaries,
                            std::span<const Ket> program_basis,
                            std::span<const Ket> data_basis,
                            std::span<const Ket> ancilla_basis,
                            const ComplexMatrix &rho_ancilla,
                            const ComplexMatrix &rho_program) {
    const std::size_t dd = data_basis.empty() ? 0 : data_basis.front().dim();
    const std::size_t da = ancilla_basis.empty() ? 0 : ancilla_basis.front().dim();
    const std::size_t kk = unitaries.size();
    require_basis(data_basis, dd, "data basis");
    require_basis(ancilla_basis, da, "ancilla basis");
    require_basis(program_basis, kk, "program basis");
    require_unitaries(unitaries, dd * da);
    if (rho_ancilla.rows() != da) {
        throw DimensionError("ancilla density has wrong dimension");
    }
    if (rho_program.rows() != kk) {
        throw DimensionError("program density has wrong dimension");
    }
    require_density(rho_ancilla, kStructuralTol, "ancilla density");
    require_density(rho_program, kStructuralTol, "program density");
    return dd;
}

} // namespace

Povm::Povm(std::vector<Effect> effects) : effects_(std::move(effects)) {
    if (effects_.empty()) {
        throw DimensionError("Povm: no effects");
    }
    dim_ = effects_.front().op.rows();
    for (const Effect &e : effects_) {
        if (!e.op.is_square() || e.op.rows() != dim_) {
            throw DimensionError("Povm: effects differ in dimension");
        }
    }
}

const Effect &Povm::at(const OutcomeLabel &label) const {
    const auto it = std::find_if(effects_.begin(), effects_.end(),
                                 [&](const Effect &e) { return e.label == label; });
    if (it == effects_.end()) {
        throw std::out_of_range("Povm::at: no effect with this label");
    }
    return *it;
}

PovmReport validate_povm(const Povm &povm, double tol) {
    PovmReport report;
    ComplexMatrix sum(povm.dim(), povm.dim());
    for (const Effect &e : povm.effects()) {
        sum += e.op;
        report.hermiticity_deviations.push_back(hermiticity_deviation(e.op));
        // Spectrum of the Hermitian part; non-Hermiticity is reported
        // separately.
        const ComplexMatrix herm = 0.5 * (e.op + e.op.dagger());
        report.min_eigenvalues.push_back(hermitian_eigenvalues(herm, tol).front());
    }
    const ComplexMatrix id = ComplexMatrix::identity(povm.dim());
    for (std::size_t r = 0; r < povm.dim(); ++r) {
        for (std::size_t c = 0; c < povm.dim(); ++c) {
            const double dev = std::abs(sum(r, c) - id(r, c));
            if (dev > report.completeness_deviation) {
                report.completeness_deviation = dev;
                report.worst_row = r;
                report.worst_col = c;
            }
        }
    }
    report.pass =
        report.completeness_deviation <= tol &&
        std::all_of(report.min_eigenvalues.begin(), report.min_eigenvalues.end(),
                    [tol](double v) { return v >= -tol; }) &&
        std::all_of(report.hermiticity_deviations.begin(),
                    report.hermiticity_deviations.end(),
                    [tol](double v) { return v <= tol; });
    return report;
}

std::vector<double> born_probabilities(const Povm &povm,
                                       const ComplexMatrix &rho) {
    if (rho.rows() != povm.dim()) {
        throw DimensionError("born_probabilities: state dimension mismatch");
    }
    require_density(rho, kStructuralTol, "born_probabilities: state");
    std::vector<double> probs;
    probs.reserve(povm.size());
    for (const Effect &e : povm.effects()) {
        // Tr(Aρ) without forming the product.
        double p = 0.0;
        for (std::size_t r = 0; r < povm.dim(); ++r) {
            for (std::size_t c = 0; c < povm.dim(); ++c) {
                p += (e.op(r, c) * rho(c, r)).real();
            }
        }
        if (p < -1e-12) {
            throw ValidationError("born_probabilities: negative probability; "
                                  "effect is not positive");
        }
        probs.push_back(std::clamp(p, 0.0, 1.0));
    }
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    if (std::abs(total - 1.0) > kStructuralTol) {
        throw ValidationError("born_probabilities: probabilities sum to " +
                              std::to_string(total) + "; POVM is incomplete");
    }
    return probs;
}

std::size_t sample_outcome(std::span<const double> probabilities,
                           std::uint64_t rng_state) {
    if (probabilities.empty()) {
        throw std::invalid_argument("sample_outcome: empty distribution");
    }
    double total = 0.0;
    for (double p : probabilities) {
        if (!(p >= 0.0)) {
            throw ValidationError("sample_outcome: negative probability");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw ValidationError("sample_outcome: probabilities do not sum to 1");
    }
    const double u = to_unit_interval(mix64(rng_state)) * total;
    double cumulative = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t idx = 0; idx < probabilities.size(); ++idx) {
        if (probabilities[idx] == 0.0) {
            continue;
        }
        last_nonzero = idx;
        cumulative += probabilities[idx];
        if (u < cumulative) {
            return idx;
        }
    }
    return last_nonzero;
}

PureProgram::PureProgram(std::vector<cplx> amplitudes)
    : amps_(std::move(amplitudes)) {
    double norm2 = 0.0;
    for (const cplx &a : amps_) {
        norm2 += std::norm(a);
    }
    if (amps_.empty() || std::abs(norm2 - 1.0) > kNormTol) {
        throw ValidationError("PureProgram: amplitudes are not normalized");
    }
}

Ket PureProgram::in_basis(std::span<const Ket> program_basis) const {
    if (program_basis.size() != amps_.size()) {
        throw DimensionError("PureProgram: basis size mismatch");
    }
    std::vector<cplx> v(program_basis.front().dim());
    for (std::size_t m = 0; m < amps_.size(); ++m) {
        for (std::size_t r = 0; r < v.size(); ++r) {
            v[r] += amps_[m] * program_basis[m][r];
        }
    }
    return Ket(std::move(v));
}

Povm induced_povm_general(std::span<const ComplexMatrix> unitaries,
                          std::span<const Ket> program_basis,
                          std::span<const Ket> data_basis,
                          std::span<const Ket> ancilla_basis,
                          std::span<const Ket> measured_program_basis,
                          const ComplexMatrix &rho_ancilla,
                          const ComplexMatrix &rho_program) {
    const std::size_t dd = check_registers(unitaries, program_basis, data_basis,
                                           ancilla_basis, rho_ancilla,
                                           rho_program);
    const std::size_t kk = unitaries.size();
    require_basis(measured_program_basis, kk, "measured program basis");

    // ⟨P_l|ρ_P|P_n⟩ and ⟨P'_k|P_l⟩.
    std::vector<cplx> rho_ln(kk * kk), overlap_kl(kk * kk);
    for (std::size_t l = 0; l < kk; ++l) {
        for (std::size_t n = 0; n < kk; ++n) {
            rho_ln[l * kk + n] =
                matrix_element(program_basis[l], rho_program, program_basis[n]);
            overlap_kl[l * kk + n] =
                inner(measured_program_basis[l], program_basis[n]);
        }
    }

    std::vector<ComplexMatrix> daggers;
    daggers.reserve(kk);
    for (const ComplexMatrix &u : unitaries) {
        daggers.push_back(u.dagger());
    }

    std::vector<Effect> effects;
    for (std::size_t i = 0; i < data_basis.size(); ++i) {
        for (std::size_t j = 0; j < ancilla_basis.size(); ++j) {
            const ComplexMatrix proj =
                tensor(data_basis[i].projector(), ancilla_basis[j].projector());
            // Tr_A[U_n† Π_ij U_l (I ⊗ ρ_A)] is independent of k.
            std::vector<ComplexMatrix> reduced(kk * kk);
            for (std::size_t n = 0; n < kk; ++n) {
                const ComplexMatrix left = daggers[n] * proj;
                for (std::size_t l = 0; l < kk; ++l) {
                    reduced[n * kk + l] =
                        reduce_over_ancilla(left * unitaries[l], rho_ancilla, dd);
                }
            }
            for (std::size_t k = 0; k < kk; ++k) {
                ComplexMatrix a(dd, dd);
                for (std::size_t n = 0; n < kk; ++n) {
                    for (std::size_t l = 0; l < kk; ++l) {
                        const cplx w = rho_ln[l * kk + n] * overlap_kl[k * kk + l] *
                                       std::conj(overlap_kl[k * kk + n]);
                        if (w != cplx{}) {
                            a += w * reduced[n * kk + l];
                        }
                    }
                }
                effects.push_back({{i, j, k}, std::move(a)});
            }
        }
    }
    return Povm(std::move(effects));
}

Povm induced_povm_matched(std::span<const ComplexMatrix> unitaries,
                          std::span<const Ket> program_basis,
                          std::span<const Ket> data_basis,
                          std::span<const Ket> ancilla_basis,
                          const ComplexMatrix &rho_ancilla,
                          const ComplexMatrix &rho_program) {
    const std::size_t dd = check_registers(unitaries, program_basis, data_basis,
                                           ancilla_basis, rho_ancilla,
                                           rho_program);
    const std::size_t kk = unitaries.size();

    std::vector<Effect> effects;
    for (std::size_t i = 0; i < data_basis.size(); ++i) {
        for (std::size_t j = 0; j < ancilla_basis.size(); ++j) {
            const ComplexMatrix proj =
                tensor(data_basis[i].projector(), ancilla_basis[j].projector());
            for (std::size_t k = 0; k < kk; ++k) {
                const double weight =
                    matrix_element(program_basis[k], rho_program, program_basis[k])
                        .real();
                ComplexMatrix a = reduce_over_ancilla(
                    unitaries[k].dagger() * proj * unitaries[k], rho_ancilla, dd);
                a *= weight;
                effects.push_back({{i, j, k}, std::move(a)});
            }
        }
    }
    return Povm(std::move(effects));
}

Povm induced_povm_no_ancilla(std::span<const ComplexMatrix> unitaries,
                             std::span<const Ket> program_basis,
                             std::span<const Ket> data_basis,
                             const ComplexMatrix &rho_program) {
    const std::size_t dd = data_basis.empty() ? 0 : data_basis.front().dim();
    const std::size_t kk = unitaries.size();
    require_basis(data_basis, dd, "data basis");
    require_basis(program_basis, kk, "program basis");
    require_unitaries(unitaries, dd);
    if (rho_program.rows() != kk) {
        throw DimensionError("program density has wrong dimension");
    }
    require_density(rho_program, kStructuralTol, "program density");

    std::vector<Effect> effects;
    for (std::size_t i = 0; i < dd; ++i) {
        const ComplexMatrix proj = data_basis[i].projector();
        for (std::size_t k = 0; k < kk; ++k) {
            const double weight =
                matrix_element(program_basis[k], rho_program, program_basis[k])
                    .real();
            ComplexMatrix a = unitaries[k].dagger() * proj * unitaries[k];
            a *= weight;
            effects.push_back({{i, 0, k}, std::move(a)});
        }
    }
    return Povm(std::move(effects));
}

ProgramContraction program_contraction(std::span<const ComplexMatrix> unitaries,
                                       const PureProgram &program,
                                       std::span<const Ket> program_basis,
                                       std::span<const Ket> measured_program_basis,
                                       std::span<const Ket> data_basis) {
    const std::size_t dd = data_basis.empty() ? 0 : data_basis.front().dim();
    const std::size_t kk = unitaries.size();
    require_basis(data_basis, dd, "data basis");
    require_basis(program_basis, kk, "program basis");
    require_basis(measured_program_basis, kk, "measured program basis");
    require_unitaries(unitaries, dd);
    if (program.dim() != kk) {
        throw DimensionError("program amplitudes do not match program basis");
    }

    std::vector<ComplexMatrix> xs;
    xs.reserve(kk);
    for (std::size_t k = 0; k < kk; ++k) {
        ComplexMatrix x(dd, dd);
        for (std::size_t m = 0; m < kk; ++m) {
            const cplx w = program.amplitudes()[m] *
                           inner(measured_program_basis[k], program_basis[m]);
            x += w * unitaries[m];
        }
        xs.push_back(std::move(x));
    }

    std::vector<Effect> effects;
    for (std::size_t i = 0; i < dd; ++i) {
        const ComplexMatrix proj = data_basis[i].projector();
        for (std::size_t k = 0; k < kk; ++k) {
            effects.push_back({{i, 0, k}, xs[k].dagger() * proj * xs[k]});
        }
    }
    return {std::move(xs), Povm(std::move(effects))};
}

} // namespace qmm
