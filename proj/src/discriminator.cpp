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

#include "qmm/discriminator.hpp"

#include <cmath>
#include <numbers>

namespace qmm {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
// Design angles this close to π/2 are treated as exactly π/2 (θ = 0);
// tan(π/4) is not exactly 1 in double precision.
constexpr double kDesignSnap = 1e-12;
constexpr double kAngleSlack = 1e-12;

Ket plus_state() {
    const double s = kInvSqrt2;
    return Ket{s, 0.0, s, 0.0};
}

Ket minus_state() {
    const double s = kInvSqrt2;
    return Ket{s, 0.0, -s, 0.0};
}

} // namespace

StatePair::StatePair(cplx alpha, cplx beta) : alpha_(alpha), beta_(beta) {
    if (std::abs(std::norm(alpha_) + std::norm(beta_) - 1.0) > kNormTol) {
        throw ValidationError("StatePair: |alpha|^2 + |beta|^2 must be 1");
    }
    if (alpha_ == cplx{} || beta_ == cplx{}) {
        throw ValidationError("StatePair: alpha and beta must both be nonzero");
    }
}

StatePair StatePair::from_angle(double phi) {
    if (!(phi > 0.0 && phi < std::numbers::pi)) {
        throw ValidationError("StatePair: phi must lie in (0, pi)");
    }
    return {std::cos(phi / 2.0), std::sin(phi / 2.0)};
}

double StatePair::phi() const noexcept {
    return 2.0 * std::atan2(std::abs(beta_), std::abs(alpha_));
}

bool StatePair::is_real() const noexcept {
    return alpha_.imag() == 0.0 && beta_.imag() == 0.0;
}

Ket StatePair::state(int sign) const {
    return Ket{alpha_, sign >= 0 ? beta_ : -beta_};
}

StatePair StatePair::with_phase(double angle) const {
    const cplx ph = std::polar(1.0, angle);
    return {alpha_ * ph, beta_ * ph};
}

DiscriminatorDesign::DiscriminatorDesign(double phi0) : phi0_(phi0) {
    if (!(phi0 >= -kAngleSlack && phi0 <= kHalfPi + kAngleSlack)) {
        throw ValidationError("DiscriminatorDesign: phi0 must lie in [0, pi/2]");
    }
    if (phi0_ < 0.0) {
        phi0_ = 0.0;
    }
    if (phi0_ >= kHalfPi - kDesignSnap) {
        cos_theta_ = 1.0;
        sin_theta_ = 0.0;
    } else {
        cos_theta_ = std::tan(phi0_ / 2.0);
        // 1 − tan²(x/2) = cos x / cos²(x/2)
        sin_theta_ = std::sqrt(std::cos(phi0_)) / std::cos(phi0_ / 2.0);
    }
}

double DiscriminatorDesign::theta() const noexcept {
    return std::atan2(sin_theta_, cos_theta_);
}

void AncillaProgram::validate() const {
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > kNormTol) {
        throw ValidationError("AncillaProgram: |a|^2 + |b|^2 must be 1");
    }
}

const char *to_string(Identification id) {
    switch (id) {
    case Identification::Psi1:
        return "psi1";
    case Identification::Psi2:
        return "psi2";
    case Identification::Inconclusive:
        return "inconclusive";
    }
    return "?";
}

ComplexMatrix design_unitary(const DiscriminatorDesign &d) {
    const double c = d.cos_theta();
    const double s = d.sin_theta();
    ComplexMatrix u(4, 4);
    // Columns are images of |00⟩, |01⟩, |10⟩, |11⟩.
    u(0, 0) = c;
    u(1, 0) = s;
    u(0, 1) = -s;
    u(1, 1) = c;
    u(2, 2) = 1.0;
    u(3, 3) = 1.0;
    return u;
}

DiscriminationProjectors discrimination_projectors() {
    ComplexMatrix plus = plus_state().projector();
    ComplexMatrix minus = minus_state().projector();
    ComplexMatrix zero = ComplexMatrix::identity(4) - plus - minus;
    return {std::move(plus), std::move(minus), std::move(zero)};
}

Identification outcome_map(std::size_t projector_index) {
    switch (projector_index) {
    case 0:
        return Identification::Psi1;
    case 1:
        return Identification::Psi2;
    case 2:
        return Identification::Inconclusive;
    default:
        throw std::out_of_range("outcome_map: projector index must be 0, 1 or 2");
    }
}

AncillaProgram solve_program(const StatePair &pair, const DiscriminatorDesign &d) {
    const cplx alpha = pair.alpha();
    const cplx beta = pair.beta();
    if (d.sin_theta() == 0.0) {
        // Condition reads α a = β a.
        if (std::abs(alpha - beta) > kNormTol) {
            throw Unprogrammable(
                "design phi0 = pi/2 discriminates only the orthogonal pair "
                "alpha = beta = 1/sqrt(2)");
        }
        return {1.0, 0.0};
    }
    const cplx ratio = (d.cos_theta() - beta / alpha) / d.sin_theta();
    const double a = 1.0 / std::sqrt(1.0 + std::norm(ratio));
    return {a, ratio * a};
}

DiscriminationOutcome evolve(const StatePair &pair, const DiscriminatorDesign &d,
                             const AncillaProgram &program, int sign) {
    program.validate();
    const Ket out =
        design_unitary(d) * tensor(pair.state(sign), program.state());
    const Ket plus = plus_state();
    const Ket minus = minus_state();
    const cplx on_plus = inner(plus, out);
    const cplx on_minus = inner(minus, out);
    return {sign >= 0 ? on_plus : on_minus, sign >= 0 ? on_minus : on_plus,
            out[1], out[3]};
}

double ratio_R(double phi, double phi0) {
    if (!(phi >= 0.0 && phi <= std::numbers::pi)) {
        throw std::domain_error("ratio_R: phi must lie in [0, pi]");
    }
    if (!(phi0 >= 0.0 && phi0 <= kHalfPi + kAngleSlack)) {
        throw std::domain_error("ratio_R: phi0 must lie in [0, pi/2]");
    }
    const double num = std::cos(phi0) * (1.0 + std::cos(phi));
    const double half_gap = std::sin((phi - phi0) / 2.0);
    const double den = num + 2.0 * half_gap * half_gap;
    if (den == 0.0) {
        return 1.0;
    }
    return num / den;
}

double success_probability(const StatePair &pair, const DiscriminatorDesign &d) {
    return evolve(pair, d, solve_program(pair, d), +1).success_probability();
}

double success_probability_closed_form(const StatePair &pair,
                                       const DiscriminatorDesign &d) {
    if (d.sin_theta() == 0.0) {
        // θ = 0: only α = β is programmable, with a = 1.
        solve_program(pair, d);
        return 2.0 * std::norm(pair.beta());
    }
    const double s = d.sin_theta();
    const double ab2 = std::norm(pair.alpha() * pair.beta());
    const double overlap = (pair.alpha() * std::conj(pair.beta())).real();
    return 2.0 * s * s * ab2 / (1.0 - 2.0 * d.cos_theta() * overlap);
}

double success_probability_printed_form(const StatePair &pair,
                                        const DiscriminatorDesign &d) {
    const double ab2 = std::norm(pair.alpha() * pair.beta());
    const double re = (pair.alpha() * pair.beta()).real();
    return 2.0 * d.sin_theta() * ab2 / (1.0 - 2.0 * d.cos_theta() * re);
}

double optimal_probability(double phi) {
    const double s = std::sin(phi / 2.0);
    return 2.0 * s * s;
}

double quasiclassical_probability(double phi) {
    const double s = std::sin(phi);
    return 0.5 * s * s;
}

DiscriminatorWiring discriminator_wiring(const DiscriminatorDesign &d) {
    const double s = kInvSqrt2;
    Processor processor({design_unitary(d)}, {Ket{1.0}}, 2, 2);
    MeasurementModel measurement({Ket{s, s}, Ket{s, -s}}, computational_basis(2),
                                 {Ket{1.0}});
    return {std::move(processor), std::move(measurement)};
}

std::array<double, 3> identification_probabilities(const StatePair &pair,
                                                   const DiscriminatorDesign &d,
                                                   const AncillaProgram &program,
                                                   int sign) {
    program.validate();
    const DiscriminatorWiring wiring = discriminator_wiring(d);
    const OutcomeTable table =
        simulate(wiring.processor, wiring.measurement, pair.state(sign).projector(),
                 program.state().projector(), ComplexMatrix::identity(1));
    std::array<double, 3> probs{};
    for (std::size_t idx = 0; idx < table.labels.size(); ++idx) {
        const OutcomeLabel &l = table.labels[idx];
        // (i=0, j=0) is P₊, (i=1, j=0) is P₋, ancilla |1⟩ spans P₀.
        const std::size_t projector = (l.j == 1) ? 2 : l.i;
        probs[static_cast<std::size_t>(outcome_map(projector))] +=
            table.probabilities[idx];
    }
    return probs;
}

} // namespace qmm
