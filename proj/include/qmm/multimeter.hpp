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
 * The programmable measurement device: a processor
 * P = Σ_k U_k ⊗ |P_k⟩⟨P_k| acting on data ⊗ ancilla ⊗ program, followed by
 * independent projective measurements on the three registers.
 *
 * simulate() evolves the full composite density matrix and is the reference
 * against which every reduced (POVM) description is checked.
 */

#pragma once

#include <vector>

#include "qmm/povm.hpp"
#include "qmm/qcore.hpp"

namespace qmm {

class Processor {
  public:
    /// `unitaries` act on data ⊗ ancilla; `program_basis` must be an
    /// orthonormal basis with one vector per unitary. Throws ValidationError
    /// or DimensionError otherwise.
    Processor(std::vector<ComplexMatrix> unitaries,
              std::vector<Ket> program_basis, std::size_t data_dim,
              std::size_t ancilla_dim);

    [[nodiscard]] const std::vector<ComplexMatrix> &unitaries() const noexcept {
        return unitaries_;
    }
    [[nodiscard]] const std::vector<Ket> &program_basis() const noexcept {
        return program_basis_;
    }
    /// {data, ancilla, program}
    [[nodiscard]] const HilbertLayout &layout() const noexcept { return layout_; }

  private:
    std::vector<ComplexMatrix> unitaries_;
    std::vector<Ket> program_basis_;
    HilbertLayout layout_;
};

class MeasurementModel {
  public:
    MeasurementModel(std::vector<Ket> data_basis, std::vector<Ket> ancilla_basis,
                     std::vector<Ket> program_basis);

    [[nodiscard]] const std::vector<Ket> &data_basis() const noexcept {
        return data_;
    }
    [[nodiscard]] const std::vector<Ket> &ancilla_basis() const noexcept {
        return ancilla_;
    }
    [[nodiscard]] const std::vector<Ket> &program_basis() const noexcept {
        return program_;
    }

    /// Computational bases in each register.
    static MeasurementModel computational(std::size_t data_dim,
                                          std::size_t ancilla_dim,
                                          std::size_t program_dim);

  private:
    std::vector<Ket> data_;
    std::vector<Ket> ancilla_;
    std::vector<Ket> program_;
};

std::vector<Ket> computational_basis(std::size_t dim);

/// Σ_k U_k ⊗ |P_k⟩⟨P_k|
ComplexMatrix build_processor_unitary(const Processor &p);

struct LabeledProjector {
    OutcomeLabel label;
    ComplexMatrix op;
};

/// E_ijk = |D_i⟩⟨D_i| ⊗ |A_j⟩⟨A_j| ⊗ |P'_k⟩⟨P'_k| in lexicographic (i,j,k)
/// order.
std::vector<LabeledProjector> build_measurement(const MeasurementModel &m);

/// Outcome probabilities in lexicographic (i, j, k) order.
struct OutcomeTable {
    std::vector<OutcomeLabel> labels;
    std::vector<double> probabilities;

    [[nodiscard]] double at(const OutcomeLabel &label) const;
};

/// p_ijk = Tr[E_ijk P (ρ_D ⊗ ρ_A ⊗ ρ_P) P†]
OutcomeTable simulate(const Processor &p, const MeasurementModel &m,
                      const ComplexMatrix &rho_data,
                      const ComplexMatrix &rho_ancilla,
                      const ComplexMatrix &rho_program);

/// Data-only qubit processor selecting a measurement axis with a qutrit
/// program: U = {I, (σx+σz)/√2, (σy+σz)/√2}, computational program basis.
/// Followed by a z measurement the three programs measure along z, x and y.
Processor spin_axis_bank();

} // namespace qmm
