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

/**
 * @file
 * POVM data model, validation, Born-rule evaluation and sampling, and the
 * POVMs induced on the data register by a programmable processor followed
 * by a product projective measurement.
 *
 * Every induced POVM labels its effects by (i, j, k): data outcome i,
 * ancilla outcome j and program outcome k. Without an ancilla j is 0.
 * Effects are never pruned, even when they vanish, so labels stay aligned
 * with the full outcome grid.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "qmm/qcore.hpp"

namespace qmm {

struct OutcomeLabel {
    std::size_t i = 0; ///< data
    std::size_t j = 0; ///< ancilla
    std::size_t k = 0; ///< program

    friend auto operator<=>(const OutcomeLabel &,
                            const OutcomeLabel &) = default;
};

struct Effect {
    OutcomeLabel label;
    ComplexMatrix op;
};

class Povm {
  public:
    /// Throws DimensionError unless every effect is square with the same
    /// dimension. Positivity and completeness are checked by validate_povm.
    explicit Povm(std::vector<Effect> effects);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t size() const noexcept { return effects_.size(); }
    [[nodiscard]] std::span<const Effect> effects() const noexcept {
        return effects_;
    }
    const Effect &operator[](std::size_t idx) const { return effects_[idx]; }

    /// Effect with the given label; throws std::out_of_range if absent.
    [[nodiscard]] const Effect &at(const OutcomeLabel &label) const;

  private:
    std::vector<Effect> effects_;
    std::size_t dim_ = 0;
};

struct PovmReport {
    bool pass = false;
    /// max |(Σ A_μ - I)_rc| and where it occurs.
    double completeness_deviation = 0.0;
    std::size_t worst_row = 0;
    std::size_t worst_col = 0;
    /// Per effect, in effect order.
    std::vector<double> min_eigenvalues;
    std::vector<double> hermiticity_deviations;
};

/// Negative eigenvalues in [-tol, 0) count as numerical zero.
PovmReport validate_povm(const Povm &povm, double tol = kStructuralTol);

/// p_μ = Tr(A_μ ρ), clamped to [0, 1]. Throws ValidationError if `rho` is not
/// a density matrix or the probabilities do not sum to 1 within 1e-10.
std::vector<double> born_probabilities(const Povm &povm,
                                       const ComplexMatrix &rho);

/// Inverse-CDF draw. The uniform variate is derived from `rng_state` alone, so
/// the result is a pure function of its arguments. Probabilities are
/// renormalized; they must already sum to 1 within 1e-9.
std::size_t sample_outcome(std::span<const double> probabilities,
                           std::uint64_t rng_state);

/// A normalized program-register state Σ_m ξ_m |P_m⟩.
class PureProgram {
  public:
    explicit PureProgram(std::vector<cplx> amplitudes);

    [[nodiscard]] std::span<const cplx> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    /// Σ_m ξ_m |P_m⟩ expressed in the computational basis.
    [[nodiscard]] Ket in_basis(std::span<const Ket> program_basis) const;

  private:
    std::vector<cplx> amps_;
};

/**
 * Most general induced POVM: program encoding basis {|P_k⟩} differs from the
 * measured program basis {|P'_k⟩} and ρ_A, ρ_P are arbitrary densities.
 *
 *   A_ijk = Σ_{n,l} Tr_A[ U_n† (|D_i⟩⟨D_i| ⊗ |A_j⟩⟨A_j|) U_l (I ⊗ ρ_A) ]
 *           · ⟨P_l|ρ_P|P_n⟩ ⟨P'_k|P_l⟩ ⟨P_n|P'_k⟩
 *
 * Each U_k acts on data ⊗ ancilla. Pass a one-element ancilla basis {|0⟩}
 * and a 1×1 ρ_A when there is no ancilla.
 */
Povm induced_povm_general(std::span<const ComplexMatrix> unitaries,
                          std::span<const Ket> program_basis,
                          std::span<const Ket> data_basis,
                          std::span<const Ket> ancilla_basis,
                          std::span<const Ket> measured_program_basis,
                          const ComplexMatrix &rho_ancilla,
                          const ComplexMatrix &rho_program);

/// Measured program basis equal to the encoding basis:
/// A_ijk = Tr_A[U_k† (|D_i⟩⟨D_i| ⊗ |A_j⟩⟨A_j|) U_k (I ⊗ ρ_A)] ⟨P_k|ρ_P|P_k⟩.
Povm induced_povm_matched(std::span<const ComplexMatrix> unitaries,
                          std::span<const Ket> program_basis,
                          std::span<const Ket> data_basis,
                          std::span<const Ket> ancilla_basis,
                          const ComplexMatrix &rho_ancilla,
                          const ComplexMatrix &rho_program);

/// No ancilla, unitaries on the data register only:
/// A_ik = U_k† |D_i⟩⟨D_i| U_k ⟨P_k|ρ_P|P_k⟩, labelled (i, 0, k).
/// Only the diagonal of ρ_P in the encoding basis matters.
Povm induced_povm_no_ancilla(std::span<const ComplexMatrix> unitaries,
                             std::span<const Ket> program_basis,
                             std::span<const Ket> data_basis,
                             const ComplexMatrix &rho_program);

struct ProgramContraction {
    /// X_k = Σ_m ξ_m ⟨P'_k|P_m⟩ U_m, generally neither unitary nor Hermitian.
    std::vector<ComplexMatrix> operators;
    /// A_ik = X_k† |D_i⟩⟨D_i| X_k, labelled (i, 0, k).
    Povm povm;
};

/// Pure program state measured in a different basis, no ancilla.
ProgramContraction program_contraction(std::span<const ComplexMatrix> unitaries,
                                       const PureProgram &program,
                                       std::span<const Ket> program_basis,
                                       std::span<const Ket> measured_program_basis,
                                       std::span<const Ket> data_basis);

} // namespace qmm
