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

#include "qmm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "qmm/discriminator.hpp"
#include "qmm/multimeter.hpp"
#include "qmm/optimize.hpp"
#include "qmm/povm.hpp"
#include "qmm/random.hpp"
#include "qmm/simlab.hpp"

namespace qmm {

namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

/// Interior grid point i of n on (lo, hi).
double interior(double lo, double hi, std::size_t i, std::size_t n) {
    return lo + (hi - lo) * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
}

} // namespace

const char *to_string(PovmConstructor c) {
    switch (c) {
    case PovmConstructor::General:
        return "general";
    case PovmConstructor::Matched:
        return "matched";
    case PovmConstructor::NoAncilla:
        return "no-ancilla";
    case PovmConstructor::Contraction:
        return "contraction";
    }
    return "?";
}

ClosedFormComparison compare_closed_forms() {
    ClosedFormComparison out;
    constexpr std::size_t kPhi0 = 10, kBeta = 10, kArg = 10;
    for (std::size_t i = 0; i < kPhi0; ++i) {
        const double phi0 = interior(0.0, kPi / 2.0, i, kPhi0);
        const DiscriminatorDesign d(phi0);
        for (std::size_t j = 0; j < kBeta; ++j) {
            const double babs = interior(0.05, 0.95, j, kBeta);
            for (std::size_t k = 0; k < kArg; ++k) {
                const double chi = interior(0.0, 2.0 * kPi, k, kArg);
                const StatePair pair(std::sqrt(1.0 - babs * babs),
                                     std::polar(babs, chi));
                const double simulated =
                    identification_probabilities(pair, d, solve_program(pair, d),
                                                 +1)[0];
                ClosedFormRow row{phi0,      babs,
                                  chi,       simulated,
                                  success_probability_closed_form(pair, d),
                                  success_probability_printed_form(pair, d)};
                out.max_derived_error = std::max(
                    out.max_derived_error, std::abs(row.derived - row.simulated));
                out.max_printed_error = std::max(
                    out.max_printed_error, std::abs(row.printed - row.simulated));
                ++out.points;
                if (j % 3 == 1 && k % 4 == 1 && i % 3 == 1) {
                    out.rows.push_back(row);
                }
            }
        }
    }
    return out;
}

OracleEquivalence povm_oracle_equivalence(PovmConstructor c, std::size_t instances,
                                          std::uint64_t seed) {
    OracleEquivalence out;
    random::Engine rng(seed ^ (static_cast<std::uint64_t>(c) << 32));
    for (std::size_t inst = 0; inst < instances; ++inst) {
        const std::size_t dd = (inst % 3 == 0) ? 3 : 2;
        const std::size_t kk = (inst % 2 == 0) ? 2 : 3;
        const bool has_ancilla =
            c == PovmConstructor::General || c == PovmConstructor::Matched;
        const std::size_t da = has_ancilla ? 2 : 1;

        std::vector<ComplexMatrix> us;
        for (std::size_t k = 0; k < kk; ++k) {
            us.push_back(random::unitary(dd * da, rng));
        }
        const std::vector<Ket> p_basis = random::orthonormal_basis(kk, rng);
        const std::vector<Ket> d_basis = random::orthonormal_basis(dd, rng);
        const std::vector<Ket> a_basis =
            has_ancilla ? random::orthonormal_basis(da, rng) : std::vector<Ket>{Ket{1.0}};
        const bool distinct_readout =
            c == PovmConstructor::General || c == PovmConstructor::Contraction;
        const std::vector<Ket> readout =
            distinct_readout ? random::orthonormal_basis(kk, rng) : p_basis;
        const ComplexMatrix rho_a =
            has_ancilla ? random::density(da, rng) : ComplexMatrix::identity(1);
        const ComplexMatrix rho_d = random::density(dd, rng);

        ComplexMatrix rho_p;
        std::optional<Povm> povm;
        switch (c) {
        case PovmConstructor::General:
            rho_p = random::density(kk, rng);
            povm = induced_povm_general(us, p_basis, d_basis, a_basis, readout,
                                        rho_a, rho_p);
            break;
        case PovmConstructor::Matched:
            rho_p = random::density(kk, rng);
            povm = induced_povm_matched(us, p_basis, d_basis, a_basis, rho_a, rho_p);
            break;
        case PovmConstructor::NoAncilla:
            rho_p = random::density(kk, rng);
            povm = induced_povm_no_ancilla(us, p_basis, d_basis, rho_p);
            break;
        case PovmConstructor::Contraction: {
            const Ket xi = random::pure_state(kk, rng);
            const PureProgram program(
                std::vector<cplx>(xi.amplitudes().begin(), xi.amplitudes().end()));
            rho_p = program.in_basis(p_basis).projector();
            povm = program_contraction(us, program, p_basis, readout, d_basis).povm;
            break;
        }
        }

        const PovmReport report = validate_povm(*povm);
        out.all_valid = out.all_valid && report.pass;
        out.max_completeness_deviation =
            std::max(out.max_completeness_deviation, report.completeness_deviation);
        out.min_eigenvalue =
            std::min(out.min_eigenvalue, *std::min_element(report.min_eigenvalues.begin(),
                                                           report.min_eigenvalues.end()));

        const std::vector<double> born = born_probabilities(*povm, rho_d);
        const OutcomeTable table =
            simulate(Processor(us, p_basis, dd, da),
                     MeasurementModel(d_basis, a_basis, readout), rho_d, rho_a, rho_p);
        for (std::size_t e = 0; e < povm->size(); ++e) {
            const double oracle = table.at((*povm)[e].label);
            out.max_probability_error =
                std::max(out.max_probability_error, std::abs(born[e] - oracle));
        }
        ++out.instances;
    }
    return out;
}

std::vector<VerifyCheck> run_verification(const VerifyOptions &opts) {
    std::vector<VerifyCheck> checks;
    auto add = [&](std::string name, bool pass, std::string detail) {
        checks.push_back({std::move(name), pass, std::move(detail)});
    };

    {
        const OptimumResult opt = best_phi0(default_interval());
        const bool pass = std::abs(opt.phi0 / kPi - 0.235) <= 0.005 &&
                          std::abs(opt.average - 0.92) <= 0.01;
        std::ostringstream os;
        os << "phi0* = " << opt.phi0 / kPi << " pi, average R = " << opt.average;
        add("optimal design angle over (0, pi/2)", pass, os.str());
    }

    {
        double worst = 0.0;
        const DiscriminatorDesign d(0.0);
        for (std::size_t i = 0; i < 1000; ++i) {
            const double phi = interior(0.0, kPi / 2.0, i, 1000);
            worst = std::max(worst, std::abs(success_probability(StatePair::from_angle(phi), d) -
                                             quasiclassical_probability(phi)));
        }
        add("phi0 = 0 reproduces the quasi-classical 1/2 sin^2(phi)", worst <= 1e-10,
            "max error " + sci(worst));
    }

    {
        double worst_r = 0.0, worst_p = 0.0;
        for (std::size_t i = 0; i < 1000; ++i) {
            const double phi0 = interior(0.0, kPi / 2.0, i, 1000);
            worst_r = std::max(worst_r, std::abs(ratio_R(phi0, phi0) - 1.0));
            worst_p = std::max(
                worst_p, std::abs(success_probability(StatePair::from_angle(phi0),
                                                      DiscriminatorDesign(phi0)) -
                                  optimal_probability(phi0)));
        }
        add("design point is optimal (R = 1)", worst_r <= 1e-12 && worst_p <= 1e-12,
            "max |R-1| " + sci(worst_r) + ", max |P - 2sin^2(phi/2)| " + sci(worst_p));
    }

    {
        double worst_wrong = 0.0, worst_consistency = 0.0, worst_real = 0.0;
        bool bounded = true;
        std::size_t points = 0;
        for (std::size_t i = 0; i < 40; ++i) {
            const double phi = interior(0.0, kPi, i, 40);
            const StatePair pair = StatePair::from_angle(phi);
            for (std::size_t j = 0; j < 40; ++j) {
                const double phi0 = kPi / 2.0 * static_cast<double>(j + 1) / 40.0;
                const DiscriminatorDesign d(phi0);
                AncillaProgram prog;
                try {
                    prog = solve_program(pair, d);
                } catch (const Unprogrammable &) {
                    continue;
                }
                ++points;
                for (int sign : {+1, -1}) {
                    const auto probs = identification_probabilities(pair, d, prog, sign);
                    worst_wrong = std::max(worst_wrong, probs[sign > 0 ? 1 : 0]);
                }
                const double p = success_probability(pair, d);
                worst_consistency = std::max(
                    worst_consistency,
                    std::abs(p - evolve(pair, d, prog, +1).success_probability()));
                worst_real = std::max(worst_real,
                                      std::abs(p - optimal_probability(phi) *
                                                       ratio_R(phi, phi0)));
                if (phi <= kPi / 2.0) {
                    bounded = bounded && p >= 0.0 &&
                              p <= optimal_probability(phi) + 1e-12 &&
                              optimal_probability(phi) <= 1.0 + 1e-15;
                }
            }
        }
        add("unambiguity over the (phi, phi0) grid",
            worst_wrong < 1e-12 && worst_consistency <= 1e-12 && bounded,
            std::to_string(points) + " points, max wrong-identification probability " +
                sci(worst_wrong));
        add("real pairs: simulated success = 2 sin^2(phi/2) R", worst_real <= 1e-12,
            "max error " + sci(worst_real));
    }

    {
        const ClosedFormComparison cmp = compare_closed_forms();
        std::ostringstream os;
        os << cmp.points << " complex pairs; derived form (sin^2 theta, Re(a conj b)) max error "
           << sci(cmp.max_derived_error)
           << "; printed form (sin theta, Re(ab)) max error " << sci(cmp.max_printed_error);
        add("complex-pair closed form vs simulation", cmp.max_derived_error <= 1e-12,
            os.str());
    }

    for (PovmConstructor c : {PovmConstructor::General, PovmConstructor::Matched,
                              PovmConstructor::NoAncilla, PovmConstructor::Contraction}) {
        const OracleEquivalence eq =
            povm_oracle_equivalence(c, opts.random_instances, opts.seed);
        const bool pass = eq.all_valid && eq.max_probability_error <= 1e-10;
        add(std::string("induced POVM (") + to_string(c) + ") matches full simulation",
            pass,
            std::to_string(eq.instances) + " instances, max |dp| " +
                sci(eq.max_probability_error) + ", min eigenvalue " +
                sci(eq.min_eigenvalue));
    }

    {
        const Processor bank = spin_axis_bank();
        const ComplexMatrix rho_p = (1.0 / 3.0) * ComplexMatrix::identity(3);
        const Povm povm = induced_povm_no_ancilla(bank.unitaries(), bank.program_basis(),
                                                  computational_basis(2), rho_p);
        const double s = kInvSqrt2;
        const std::vector<std::vector<Ket>> axes{
            {Ket{1.0, 0.0}, Ket{0.0, 1.0}},
            {Ket{s, s}, Ket{s, -s}},
            {Ket{s, cplx{0.0, s}}, Ket{s, cplx{0.0, -s}}}};
        double worst = 0.0;
        for (const Effect &e : povm.effects()) {
            const ComplexMatrix expected = (1.0 / 3.0) * axes[e.label.k][e.label.i].projector();
            worst = std::max(worst, e.op.max_abs_diff(expected));
        }
        add("spin-axis bank measures z, x and y with weight 1/3", worst <= 1e-12,
            "max entry error " + sci(worst));
    }

    {
        Scenario s{StatePair::from_angle(kPi / 3.0), DiscriminatorDesign(kPi / 4.0),
                   std::nullopt, {0.5, 0.5}, opts.trials, opts.seed};
        const TrialStats stats = monte_carlo(s);
        const AnalyticComparison cmp =
            compare_analytic(stats, scenario_success_probability(s));
        std::ostringstream os;
        os << stats.trials << " trials, frequency " << cmp.frequency << " vs "
           << cmp.expected << ", z = " << cmp.z << ", wrong = " << cmp.errors;
        add("Monte Carlo: no wrong identifications, success within 4 sigma", cmp.pass,
            os.str());

        // A program solved for a different pair must produce errors.
        s.program = solve_program(StatePair::from_angle(kPi / 5.0), s.design);
        const TrialStats bad = monte_carlo(s);
        add("Monte Carlo negative control (mismatched program errs)",
            bad.wrong_identifications() > 0,
            std::to_string(bad.wrong_identifications()) + " wrong identifications");
    }

    return checks;
}

} // namespace qmm
