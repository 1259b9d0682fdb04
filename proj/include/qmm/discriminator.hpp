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
 * Programmable unambiguous discriminator for the symmetric qubit pairs
 * |ψ₁,₂⟩ = α|0⟩ ± β|1⟩.
 *
 * A fixed two-qubit unitary, parameterized by a design angle φ₀, acts on
 * data ⊗ ancilla. The ancilla state a|0⟩ + b|1⟩ is the program: it is
 * chosen per pair so that the final measurement {P₊, P₋, P₀} never
 * misidentifies the input. Basis index of |d a⟩ is 2d + a.
 */

#pragma once

#include <array>
#include <stdexcept>

#include "qmm/multimeter.hpp"
#include "qmm/qcore.hpp"

namespace qmm {

/// The device cannot be programmed for the requested pair.
class Unprogrammable : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Symmetric pair α|0⟩ ± β|1⟩.
class StatePair {
  public:
    /// Throws ValidationError unless |α|²+|β|² = 1 within 1e-12 and both
    /// amplitudes are nonzero.
    StatePair(cplx alpha, cplx beta);

    /// α = cos(φ/2), β = sin(φ/2) for φ in (0, π).
    static StatePair from_angle(double phi);

    [[nodiscard]] cplx alpha() const noexcept { return alpha_; }
    [[nodiscard]] cplx beta() const noexcept { return beta_; }
    /// 2·atan2(|β|, |α|); the angle between the two states for real pairs.
    [[nodiscard]] double phi() const noexcept;
    [[nodiscard]] bool is_real() const noexcept;

    /// sign = +1 gives ψ₁, sign = -1 gives ψ₂.
    [[nodiscard]] Ket state(int sign) const;

    /// Same pair times a global phase.
    [[nodiscard]] StatePair with_phase(double angle) const;

  private:
    cplx alpha_;
    cplx beta_;
};

/// Fixed device parameter φ₀ ∈ [0, π/2] with cos θ = tan(φ₀/2).
class DiscriminatorDesign {
  public:
    explicit DiscriminatorDesign(double phi0);

    [[nodiscard]] double phi0() const noexcept { return phi0_; }
    [[nodiscard]] double cos_theta() const noexcept { return cos_theta_; }
    [[nodiscard]] double sin_theta() const noexcept { return sin_theta_; }
    [[nodiscard]] double theta() const noexcept;

  private:
    double phi0_;
    double cos_theta_;
    double sin_theta_;
};

/// Ancilla program a|0_A⟩ + b|1_A⟩.
struct AncillaProgram {
    cplx a;
    cplx b;

    /// Throws ValidationError unless |a|²+|b|² = 1 within 1e-12.
    void validate() const;
    [[nodiscard]] Ket state() const { return Ket{a, b}; }
};

/// Amplitudes of the evolved state on the measurement basis.
struct DiscriminationOutcome {
    cplx success;  ///< q: amplitude on |±⟩ matching the input sign
    cplx wrong;    ///< amplitude on the opposite |∓⟩; 0 for a solving program
    cplx const1;   ///< amplitude on |0_D 1_A⟩
    cplx const2;   ///< amplitude on |1_D 1_A⟩

    [[nodiscard]] double success_probability() const { return std::norm(success); }
    [[nodiscard]] double wrong_probability() const { return std::norm(wrong); }
    [[nodiscard]] double inconclusive_probability() const {
        return std::norm(const1) + std::norm(const2);
    }
};

enum class Identification { Psi1 = 0, Psi2 = 1, Inconclusive = 2 };

const char *to_string(Identification id);

/**
 * |00⟩ → cos θ|00⟩ + sin θ|01⟩
 * |10⟩ → |10⟩
 * |01⟩ → −sin θ|00⟩ + cos θ|01⟩
 * |11⟩ → |11⟩
 */
ComplexMatrix design_unitary(const DiscriminatorDesign &d);

struct DiscriminationProjectors {
    ComplexMatrix plus;  ///< |+⟩⟨+|, |±⟩ = (|00⟩ ± |10⟩)/√2
    ComplexMatrix minus; ///< |−⟩⟨−|
    ComplexMatrix zero;  ///< I − P₊ − P₋
};

DiscriminationProjectors discrimination_projectors();

/// Projector index 0 → ψ₁, 1 → ψ₂, 2 → inconclusive.
Identification outcome_map(std::size_t projector_index);

/**
 * Ancilla program satisfying α a cos θ − α b sin θ = β a, normalized with a
 * real and nonnegative. Throws Unprogrammable when θ = 0 (φ₀ = π/2) and
 * α ≠ β, where the condition forces a = 0.
 */
AncillaProgram solve_program(const StatePair &pair, const DiscriminatorDesign &d);

/// Applies the design unitary to (α|0⟩ ± β|1⟩) ⊗ (a|0⟩ + b|1⟩).
DiscriminationOutcome evolve(const StatePair &pair, const DiscriminatorDesign &d,
                             const AncillaProgram &program, int sign);

/**
 * Ratio of the achieved to the optimal success probability for real pairs,
 *
 *   R = cos φ₀ (1 + cos φ) / (1 + cos φ₀ − sin φ sin φ₀),
 *
 * evaluated in the equivalent cancellation-free form
 * cos φ₀ (1 + cos φ) / (cos φ₀ (1 + cos φ) + 2 sin²((φ − φ₀)/2)).
 * Requires φ ∈ [0, π] and φ₀ ∈ [0, π/2].
 */
double ratio_R(double phi, double phi0);

/// |q|² of the solving program, evaluated through evolve().
double success_probability(const StatePair &pair, const DiscriminatorDesign &d);

/// Closed form 2 sin²θ |αβ|² / (1 − 2 cos θ Re(α β*)), valid for complex
/// pairs. Throws Unprogrammable under the same condition as solve_program.
double success_probability_closed_form(const StatePair &pair,
                                       const DiscriminatorDesign &d);

/// The alternative closed form 2 sin θ |αβ|² / (1 − 2 cos θ Re(αβ)), with the
/// first power of sin θ and no conjugate. It disagrees with evolve() away from
/// θ = 0, π/2 and is kept only so the comparison can be reported.
double success_probability_printed_form(const StatePair &pair,
                                        const DiscriminatorDesign &d);

/// 2 sin²(φ/2), the best unambiguous success probability for the pair.
double optimal_probability(double phi);

/// ½ sin²φ, from choosing at random between the two projective tests that
/// each exclude one of the states.
double quasiclassical_probability(double phi);

/// The discriminator as a multimeter: data ⊗ ancilla with a trivial program
/// register, measured in the {|+⟩,|−⟩} data basis and computational ancilla
/// basis. Outcome (i, j=0) is |±⟩; j=1 is inconclusive.
struct DiscriminatorWiring {
    Processor processor;
    MeasurementModel measurement;
};

DiscriminatorWiring discriminator_wiring(const DiscriminatorDesign &d);

/// Probabilities {ψ₁, ψ₂, inconclusive} for the input of the given sign,
/// computed with the full-state simulate().
std::array<double, 3> identification_probabilities(const StatePair &pair,
                                                   const DiscriminatorDesign &d,
                                                   const AncillaProgram &program,
                                                   int sign);

} // namespace qmm
